#pragma once

// Independent oracles for the test suites. These deliberately avoid the
// library's own computation paths: valuations come from the pi-power basis
// instead of norms, and big-integer checks go straight through GMP.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pprimary/cyclo.hpp"
#include "pprimary/valuation.hpp"

namespace oracles {

inline mpz_class mpz_pow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline std::int64_t mpz_vp(const mpz_class& v, std::uint64_t p) {
    if (sgn(v) == 0)
        return -1; // caller treats as "infinite"
    mpz_class tmp, pz(static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(
        mpz_remove(tmp.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()));
}

// v_K through the pi-power basis: writing x = sum_j c_j zeta^j =
// sum_j c_j (1 + pi)^j = sum_i b_i pi^i with b_i = sum_j C(j,i) c_j, the
// candidate valuations e*v_p(b_i) + i are pairwise distinct mod e, so no
// cancellation can occur and
//
//     v_K(x) = min_i ( e * v_p(b_i) + i ).
//
// A coefficient that vanishes mod p^N contributes at least e*N + i, giving
// the same resolution bound e*N as the norm route, but through completely
// different arithmetic.
inline pprimary::Valuation pi_basis_valuation(const pprimary::CycloElement& x) {
    const auto& f = x.field();
    const unsigned e = f.degree;
    const mpz_class modulus = mpz_pow(mpz_class(static_cast<unsigned long>(f.prime)),
                                      f.precision);
    std::vector<mpz_class> b(e, mpz_class(0));
    mpz_class binom;
    for (unsigned j = 0; j < e; ++j) {
        if (x.coeffs()[j] == 0)
            continue;
        const mpz_class cj(static_cast<unsigned long>(x.coeffs()[j]));
        for (unsigned i = 0; i <= j; ++i) {
            mpz_bin_uiui(binom.get_mpz_t(), j, i);
            b[i] += binom * cj;
        }
    }
    bool found = false;
    std::int64_t best = 0;
    for (unsigned i = 0; i < e; ++i) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), b[i].get_mpz_t(), modulus.get_mpz_t());
        std::int64_t v = mpz_vp(r, f.prime);
        if (v < 0)
            continue;
        const std::int64_t cand = static_cast<std::int64_t>(e) * v + i;
        if (!found || cand < best) {
            found = true;
            best = cand;
        }
    }
    return found ? pprimary::Valuation::finite(best)
                 : pprimary::Valuation::at_precision();
}

} // namespace oracles
