#pragma once

#include <cstdint>
#include <string>

#include "pprimary/errors.hpp"
#include "pprimary/valuation.hpp"

namespace pprimary {

/**
 * An element of Z_p known modulo p^N.
 *
 * The representation is exact: a PadicInt is the residue class
 * residue + p^N Z_p, kept in canonical form 0 <= residue < p^N at all
 * times. Arithmetic never changes N silently; mixing different primes or
 * precisions throws MismatchError instead of truncating, so valuations
 * stay auditable.
 *
 * p^N must fit in 62 bits. Small primes and desk-scale precisions are the
 * intended regime; fractions (negative valuations) are out of scope.
 */
class PadicInt {
  public:
    // Canonicalizes residue modulo p^N. Throws ConfigError for composite p,
    // N < 1, or p^N >= 2^62.
    PadicInt(std::uint64_t prime, unsigned precision, std::uint64_t residue);

    // Same, but accepts negative integers (reduced into [0, p^N)).
    static PadicInt from_integer(std::uint64_t prime, unsigned precision,
                                 std::int64_t value);

    static PadicInt zero(std::uint64_t prime, unsigned precision) {
        return PadicInt(prime, precision, 0);
    }
    static PadicInt one(std::uint64_t prime, unsigned precision) {
        return PadicInt(prime, precision, 1);
    }

    std::uint64_t prime() const { return prime_; }
    unsigned precision() const { return precision_; }
    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; } // p^N

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return residue_ % prime_ != 0; }

    PadicInt operator+(const PadicInt& rhs) const;
    PadicInt operator-(const PadicInt& rhs) const;
    PadicInt operator*(const PadicInt& rhs) const;
    PadicInt operator-() const;

    // a^k at precision N (binary exponentiation).
    PadicInt pow(std::uint64_t exponent) const;

    friend bool operator==(const PadicInt&, const PadicInt&) = default;

    std::string to_string() const;

  private:
    std::uint64_t prime_;
    unsigned precision_;
    std::uint64_t modulus_;
    std::uint64_t residue_;

    void check_compatible(const PadicInt& rhs) const;
};

// Multiplicative inverse of a unit at precision N. Throws NotAUnitError.
PadicInt invert(const PadicInt& a);

// Largest k with p^k dividing the residue; AT-PRECISION when the residue is
// zero. A finite result is always < N and exact.
Valuation vp(const PadicInt& a);

// vp(u - 1): the largest i with u in U_i when finite. Throws NotAUnitError.
Valuation unit_level(const PadicInt& u);

// The unique (p-1)-th root of unity congruent to u mod p, computed by
// iterating u -> u^p to stabilization at precision N.
PadicInt teichmuller(const PadicInt& u);

/**
 * Hensel p-th root inside the unit filtration.
 *
 * Given y with unit_level(y) >= n+1 and n > 1/(p-1) (so n >= 1 for odd p,
 * n >= 2 for p = 2, where the p-th power map U_n -> U_{n+1} of Q_p is a
 * bijection), returns the unique x in U_n with x^p = y. The root is
 * determined one digit at a time, so the result carries precision N-1.
 *
 * For p = 2 the root in U_n is the canonical choice (it is = 1 mod 4; the
 * other square root lies outside U_n).
 *
 * Throws LevelError when the level preconditions fail, PrecisionExhausted
 * if a digit cannot be resolved within the precision budget.
 */
PadicInt pth_root_in_level(const PadicInt& y, unsigned n);

namespace detail {
// (a * b) mod m via 128-bit intermediate. Exposed for the other modules'
// internal kernels; not part of the public surface.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
bool is_small_prime(std::uint64_t p);
// p^N, throwing ConfigError if it does not fit below 2^62.
std::uint64_t checked_pow(std::uint64_t p, unsigned n);
} // namespace detail

} // namespace pprimary
