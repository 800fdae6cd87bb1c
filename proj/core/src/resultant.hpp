#pragma once

// Exact integer resultants via small-prime CRT. Internal; the public face
// is norm_via_resultant and the discriminant checks built on top of it.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace pprimary::detail {

// Res(A, B) of integer polynomials, coefficients ascending, computed exactly
// over Z: Euclidean remainder sequences modulo a pool of 62-bit primes, then
// CRT reconstruction below a Hadamard-style bound. A must be nonconstant.
mpz_class integer_resultant(const std::vector<mpz_class>& A,
                            const std::vector<mpz_class>& B);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f) for nonconstant f.
mpz_class integer_discriminant(const std::vector<mpz_class>& f);

} // namespace pprimary::detail
