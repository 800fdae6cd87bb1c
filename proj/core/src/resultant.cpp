#include "resultant.hpp"

#include <cstdint>

#include "pprimary/errors.hpp"
#include "pprimary/padic.hpp"

namespace pprimary::detail {

namespace {

bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

const std::vector<std::uint64_t>& crt_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        ps.reserve(512);
        std::uint64_t c = (std::uint64_t(1) << 62) - 1;
        while (ps.size() < 512) {
            if (miller_rabin_u64(c))
                ps.push_back(c);
            c -= 2;
        }
        return ps;
    }();
    return primes;
}

unsigned trimmed_degree(const std::vector<std::uint64_t>& v) {
    unsigned d = static_cast<unsigned>(v.size());
    while (d > 0 && v[d - 1] == 0)
        --d;
    return d; // number of coefficients; degree is d-1
}

// Res of two polynomials over F_q by the Euclidean remainder sequence,
// using Res(A,B) = (-1)^{dA dB} lc(B)^{dA - dR} Res(B, A mod B).
std::uint64_t resultant_mod_q(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                              std::uint64_t q) {
    std::uint64_t acc = 1; // always a unit mod q
    unsigned na = trimmed_degree(a);
    unsigned nb = trimmed_degree(b);
    a.resize(na);
    b.resize(nb);
    while (true) {
        if (nb == 0)
            return 0; // B vanished while deg A >= 1: common factor
        if (nb == 1)
            return mulmod(acc, powmod(b[0], na - 1, q), q);
        if (na < nb) {
            if (((na - 1) & 1) && ((nb - 1) & 1))
                acc = q - acc;
            std::swap(a, b);
            std::swap(na, nb);
        }
        // Reduce A modulo B in place; the remainder ends up in a[0..nb-2].
        const std::uint64_t lead_inv = powmod(b[nb - 1], q - 2, q);
        for (unsigned k = na; k-- > nb - 1;) {
            const std::uint64_t coef = a[k];
            if (coef == 0)
                continue;
            const std::uint64_t fac = mulmod(coef, lead_inv, q);
            const unsigned shift = k + 1 - nb;
            for (unsigned i = 0; i < nb; ++i) {
                const std::uint64_t t = mulmod(fac, b[i], q);
                std::uint64_t& dst = a[i + shift];
                dst = dst >= t ? dst - t : dst + (q - t);
            }
        }
        unsigned nr = nb - 1;
        while (nr > 0 && a[nr - 1] == 0)
            --nr;
        if (nr == 0)
            return 0; // B divides A exactly
        acc = mulmod(acc, powmod(b[nb - 1], na - nr, q), q);
        if (((na - 1) & 1) && ((nb - 1) & 1))
            acc = q - acc;
        a.resize(nr);
        std::swap(a, b); // now a = old B, b = remainder
        na = nb;
        nb = nr;
    }
}

std::vector<std::uint64_t> reduce_poly_mod(const std::vector<mpz_class>& f,
                                           std::uint64_t q) {
    std::vector<std::uint64_t> r(f.size());
    mpz_class tmp, qz(static_cast<unsigned long>(q));
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_mod(tmp.get_mpz_t(), f[i].get_mpz_t(), qz.get_mpz_t());
        r[i] = mpz_get_ui(tmp.get_mpz_t());
    }
    return r;
}

unsigned mpz_poly_degree_plus_one(const std::vector<mpz_class>& f) {
    unsigned d = static_cast<unsigned>(f.size());
    while (d > 0 && sgn(f[d - 1]) == 0)
        --d;
    return d;
}

} // namespace

mpz_class integer_resultant(const std::vector<mpz_class>& A_in,
                            const std::vector<mpz_class>& B_in) {
    std::vector<mpz_class> A = A_in, B = B_in;
    const unsigned na = mpz_poly_degree_plus_one(A);
    const unsigned nb = mpz_poly_degree_plus_one(B);
    if (na < 2)
        throw RangeError("integer_resultant: first polynomial must be nonconstant");
    A.resize(na);
    if (nb == 0)
        return mpz_class(0);
    B.resize(nb);
    if (nb == 1) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), B[0].get_mpz_t(), na - 1);
        return r;
    }

    // |Res|^2 <= (sum a_i^2)^{deg B} (sum b_i^2)^{deg A}
    mpz_class sa(0), sb(0);
    for (const auto& c : A)
        sa += c * c;
    for (const auto& c : B)
        sb += c * c;
    mpz_class bound2, t;
    mpz_pow_ui(bound2.get_mpz_t(), sa.get_mpz_t(), nb - 1);
    mpz_pow_ui(t.get_mpz_t(), sb.get_mpz_t(), na - 1);
    bound2 *= t;
    bound2 *= 4; // reconstruct in (-P/2, P/2] with P^2 > 4 |Res|^2

    mpz_class X(0), P(1);
    for (std::uint64_t q : crt_primes()) {
        mpz_class la = A[na - 1] % q, lb = B[nb - 1] % q;
        if (sgn(la) == 0 || sgn(lb) == 0)
            continue; // degree would drop mod q
        std::uint64_t rq =
            resultant_mod_q(reduce_poly_mod(A, q), reduce_poly_mod(B, q), q);
        // CRT: X <- X + P * ((rq - X) / P mod q)
        mpz_class qz(static_cast<unsigned long>(q));
        mpz_class xq = X % qz;
        std::uint64_t xr = mpz_get_ui(xq.get_mpz_t());
        mpz_class pq = P % qz;
        std::uint64_t pinv = powmod(mpz_get_ui(pq.get_mpz_t()), q - 2, q);
        std::uint64_t delta = mulmod((rq + q - xr) % q, pinv, q);
        X += P * mpz_class(static_cast<unsigned long>(delta));
        P *= qz;
        if (P * P > bound2) {
            mpz_class half = P >> 1;
            if (X > half)
                X -= P;
            return X;
        }
    }
    throw InternalInconsistencyError("resultant CRT prime pool exhausted");
}

mpz_class integer_discriminant(const std::vector<mpz_class>& f) {
    const unsigned nf = mpz_poly_degree_plus_one(f);
    if (nf < 2)
        throw RangeError("discriminant of a constant polynomial");
    const unsigned deg = nf - 1;
    std::vector<mpz_class> df(deg);
    for (unsigned i = 1; i < nf; ++i)
        df[i - 1] = f[i] * i;
    mpz_class res = integer_resultant(f, df);
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f[nf - 1].get_mpz_t());
    if ((std::uint64_t(deg) * (deg - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

} // namespace pprimary::detail
