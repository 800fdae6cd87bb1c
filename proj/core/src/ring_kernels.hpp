#pragma once

// Internal polynomial kernels for the cyclotomic ring Z[x]/(Phi_{p^m}, M),
// shared by the word-size fast path (M = p^N) and the extended-precision
// valuation path (M = p^N'' held in an mpz). Not installed.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pprimary/cyclo.hpp"
#include "pprimary/padic.hpp"

namespace pprimary::detail {

struct U64Ring {
    using Value = std::uint64_t;
    std::uint64_t mod;

    Value zero() const { return 0; }
    bool is_zero(const Value& a) const { return a == 0; }
    Value add(const Value& a, const Value& b) const {
        Value s = a + b;
        return s >= mod ? s - mod : s;
    }
    Value sub(const Value& a, const Value& b) const {
        return a >= b ? a - b : a + (mod - b);
    }
    Value mul(const Value& a, const Value& b) const { return mulmod(a, b, mod); }
};

struct MpzRing {
    using Value = mpz_class;
    mpz_class mod;

    Value zero() const { return mpz_class(0); }
    bool is_zero(const Value& a) const { return sgn(a) == 0; }
    Value add(const Value& a, const Value& b) const {
        mpz_class r = a + b;
        if (r >= mod)
            r -= mod;
        return r;
    }
    Value sub(const Value& a, const Value& b) const {
        mpz_class r = a - b;
        if (sgn(r) < 0)
            r += mod;
        return r;
    }
    Value mul(const Value& a, const Value& b) const {
        mpz_class r = a * b;
        return r % mod;
    }
};

// Folds exponents in [e, p^m) down to the power basis using
// zeta^{e+r} = -(zeta^r + zeta^{ebar+r} + ... + zeta^{(p-2) ebar + r}).
// Every target exponent is already < e, so one pass suffices.
template <class Ring>
void reduce_tail(const Ring& R, const FieldDescriptor& f,
                 std::vector<typename Ring::Value>& buf) {
    const unsigned e = f.degree;
    for (std::uint64_t t = f.pm; t-- > e;) {
        if (R.is_zero(buf[t]))
            continue;
        typename Ring::Value c = buf[t];
        buf[t] = R.zero();
        const std::uint64_t r = t - e;
        for (std::uint64_t j = 0; j + 1 < f.prime; ++j) {
            const std::uint64_t k = j * f.e_bar + r;
            buf[k] = R.sub(buf[k], c);
        }
    }
}

template <class Ring>
std::vector<typename Ring::Value> mul_reduce(const Ring& R, const FieldDescriptor& f,
                                             const std::vector<typename Ring::Value>& a,
                                             const std::vector<typename Ring::Value>& b) {
    const unsigned e = f.degree;
    std::vector<typename Ring::Value> buf(f.pm, R.zero());
    for (unsigned i = 0; i < e; ++i) {
        if (R.is_zero(a[i]))
            continue;
        for (unsigned j = 0; j < e; ++j) {
            if (R.is_zero(b[j]))
                continue;
            std::uint64_t t = i + j;
            if (t >= f.pm)
                t -= f.pm;
            buf[t] = R.add(buf[t], R.mul(a[i], b[j]));
        }
    }
    reduce_tail(R, f, buf);
    buf.resize(e);
    return buf;
}

// mpz overload: accumulate products without intermediate reduction (one
// mpz_mod per output coefficient), which is what makes the deep-valuation
// path usable at degree ~500.
inline std::vector<mpz_class> mul_reduce(const MpzRing& R, const FieldDescriptor& f,
                                         const std::vector<mpz_class>& a,
                                         const std::vector<mpz_class>& b) {
    const unsigned e = f.degree;
    std::vector<mpz_class> buf(f.pm, mpz_class(0));
    for (unsigned i = 0; i < e; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (unsigned j = 0; j < e; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            std::uint64_t t = i + j;
            if (t >= f.pm)
                t -= f.pm;
            mpz_addmul(buf[t].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (auto& v : buf)
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), R.mod.get_mpz_t());
    reduce_tail(R, f, buf);
    buf.resize(e);
    return buf;
}

template <class Ring>
std::vector<typename Ring::Value> galois_map(const Ring& R, const FieldDescriptor& f,
                                             const std::vector<typename Ring::Value>& c,
                                             std::uint64_t a) {
    std::vector<typename Ring::Value> buf(f.pm, R.zero());
    for (unsigned j = 0; j < f.degree; ++j) {
        if (R.is_zero(c[j]))
            continue;
        const std::uint64_t t = (a * j) % f.pm;
        buf[t] = R.add(buf[t], c[j]);
    }
    reduce_tail(R, f, buf);
    buf.resize(f.degree);
    return buf;
}

// Product of all Galois conjugates. The result is the norm, i.e. a rational
// scalar: coefficients 1..e-1 of the returned vector must vanish exactly,
// which callers assert.
template <class Ring>
std::vector<typename Ring::Value> conjugate_product(const Ring& R, const FieldDescriptor& f,
                                                    const std::vector<typename Ring::Value>& c) {
    std::vector<typename Ring::Value> acc = c;
    for (std::uint64_t a = 2; a < f.pm; ++a) {
        if (a % f.prime == 0)
            continue;
        acc = mul_reduce(R, f, acc, galois_map(R, f, c, a));
    }
    return acc;
}

} // namespace pprimary::detail
