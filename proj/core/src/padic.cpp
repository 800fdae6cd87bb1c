#include "pprimary/padic.hpp"

namespace pprimary {

namespace detail {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool is_small_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned n) {
    constexpr std::uint64_t kLimit = std::uint64_t(1) << 62;
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (acc > (kLimit - 1) / p)
            throw ConfigError("p^N exceeds the 62-bit residue limit");
        acc *= p;
    }
    return acc;
}

} // namespace detail

PadicInt::PadicInt(std::uint64_t prime, unsigned precision, std::uint64_t residue)
    : prime_(prime), precision_(precision) {
    if (!detail::is_small_prime(prime))
        throw ConfigError("p must be a (small) prime, got " + std::to_string(prime));
    if (precision < 1)
        throw ConfigError("precision must be at least 1");
    modulus_ = detail::checked_pow(prime, precision);
    residue_ = residue % modulus_;
}

PadicInt PadicInt::from_integer(std::uint64_t prime, unsigned precision,
                                std::int64_t value) {
    PadicInt r(prime, precision, 0);
    std::int64_t m = static_cast<std::int64_t>(r.modulus_);
    std::int64_t v = value % m;
    if (v < 0)
        v += m;
    r.residue_ = static_cast<std::uint64_t>(v);
    return r;
}

void PadicInt::check_compatible(const PadicInt& rhs) const {
    if (prime_ != rhs.prime_)
        throw MismatchError("operands carry different primes");
    if (precision_ != rhs.precision_)
        throw MismatchError("operands carry different precisions");
}

PadicInt PadicInt::operator+(const PadicInt& rhs) const {
    check_compatible(rhs);
    PadicInt r = *this;
    r.residue_ = residue_ + rhs.residue_;
    if (r.residue_ >= modulus_)
        r.residue_ -= modulus_;
    return r;
}

PadicInt PadicInt::operator-(const PadicInt& rhs) const {
    check_compatible(rhs);
    PadicInt r = *this;
    r.residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_
                                          : residue_ + modulus_ - rhs.residue_;
    return r;
}

PadicInt PadicInt::operator*(const PadicInt& rhs) const {
    check_compatible(rhs);
    PadicInt r = *this;
    r.residue_ = detail::mulmod(residue_, rhs.residue_, modulus_);
    return r;
}

PadicInt PadicInt::operator-() const {
    PadicInt r = *this;
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
    return r;
}

PadicInt PadicInt::pow(std::uint64_t exponent) const {
    PadicInt r = *this;
    r.residue_ = detail::powmod(residue_, exponent, modulus_);
    return r;
}

std::string PadicInt::to_string() const {
    return std::to_string(residue_) + " (mod " + std::to_string(prime_) + "^" +
           std::to_string(precision_) + ")";
}

PadicInt invert(const PadicInt& a) {
    if (!a.is_unit())
        throw NotAUnitError("cannot invert " + a.to_string());
    // The unit group of Z/p^N has order p^{N-1}(p-1).
    std::uint64_t order = 1;
    for (unsigned i = 1; i < a.precision(); ++i)
        order *= a.prime();
    order *= a.prime() - 1;
    return a.pow(order - 1);
}

Valuation vp(const PadicInt& a) {
    if (a.is_zero())
        return Valuation::at_precision();
    std::uint64_t r = a.residue();
    std::int64_t v = 0;
    while (r % a.prime() == 0) {
        r /= a.prime();
        ++v;
    }
    return Valuation::finite(v);
}

Valuation unit_level(const PadicInt& u) {
    if (!u.is_unit())
        throw NotAUnitError("unit_level of non-unit " + u.to_string());
    return vp(u - PadicInt::one(u.prime(), u.precision()));
}

PadicInt teichmuller(const PadicInt& u) {
    if (!u.is_unit())
        throw NotAUnitError("teichmuller of non-unit " + u.to_string());
    // u^(p^k) is constant mod p^{k+1}, so N iterations always stabilize.
    PadicInt x = u;
    for (unsigned i = 0; i < u.precision(); ++i) {
        PadicInt next = x.pow(u.prime());
        if (next == x)
            break;
        x = next;
    }
    return x;
}

PadicInt pth_root_in_level(const PadicInt& y, unsigned n) {
    const std::uint64_t p = y.prime();
    const unsigned N = y.precision();
    if (!y.is_unit())
        throw NotAUnitError("pth_root_in_level of non-unit " + y.to_string());
    if (n < 1 || n * (p - 1) <= 1)
        throw LevelError("level n must satisfy n > 1/(p-1); got n = " +
                         std::to_string(n));
    if (!unit_level(y).at_least(static_cast<std::int64_t>(n) + 1))
        throw LevelError("argument must lie in U_{n+1}, level too small");
    if (N < 2)
        throw PrecisionExhaustedError("cannot drop precision below 1");

    // Digit-by-digit Hensel lift of x^p = y within U_n. Adding t*p^j to x
    // moves x^p by t * p^{j+1} * x^{p-1} (the higher binomial terms land
    // beyond p^{j+2} because j >= n > 1/(p-1)). So each digit of the root
    // is determined by one digit of the defect y - x^p, lowest first.
    const unsigned Nr = N - 1;
    PadicInt x = PadicInt::one(p, Nr);
    const std::uint64_t big = y.modulus(); // p^N
    std::uint64_t xr = 1;                  // root residue, tracked mod p^N
    std::uint64_t pj = 1;
    for (unsigned i = 0; i < n && i < Nr; ++i)
        pj *= p;
    for (unsigned j = n; j < Nr; ++j) {
        std::uint64_t xp = detail::powmod(xr, p, big);
        std::uint64_t defect = (y.residue() + big - xp) % big;
        std::uint64_t step = pj * p; // p^{j+1}
        if (defect % step != 0)
            throw PrecisionExhaustedError("p-th root digit did not resolve");
        // t = d / x^{p-1} mod p, and x = 1 mod p makes the division trivial.
        std::uint64_t t = (defect / step) % p;
        xr = (xr + t * pj) % big;
        pj *= p;
    }
    std::uint64_t check = detail::powmod(xr, p, big);
    std::uint64_t want = y.residue();
    if ((check % x.modulus()) != (want % x.modulus()))
        throw PrecisionExhaustedError("p-th root iteration failed to converge");
    return PadicInt(p, Nr, xr % x.modulus());
}

} // namespace pprimary
