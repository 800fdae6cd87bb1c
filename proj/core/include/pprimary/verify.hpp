#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pprimary/cyclo.hpp"
#include "pprimary/padic.hpp"
#include "pprimary/valuation.hpp"

namespace pprimary {

enum class Outcome { Pass, Fail, Inconclusive };

std::string to_string(Outcome o);

struct Observation {
    std::string input;
    std::string observed;
    std::string expected;
};

/**
 * Structured record of one claim check.
 *
 * Reports are deterministic functions of their parameters (seed included):
 * two runs with the same configuration produce byte-identical reports
 * except for elapsed_ms. A Fail always carries at least one concrete
 * counter-observation; Inconclusive is reserved for existence-witness
 * searches that exhausted their draw cap.
 */
struct VerificationReport {
    std::string claim_id;
    std::vector<std::pair<std::string, std::string>> parameters; // key-sorted
    Outcome outcome = Outcome::Pass;
    std::vector<Observation> observations;
    double elapsed_ms = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr int kWitnessCap = 500;

// Default working precision for K = Q_p(zeta_{p^m}).
inline unsigned default_precision(unsigned m) { return m + 6; }

// Claim: norms of p-primary units of K land in U_{m+1} of Q_p. Checks
// `samples` seeded p-primary units.
VerificationReport verify_main_congruence(std::uint64_t p, unsigned m, int samples,
                                          std::uint64_t seed, unsigned precision = 0);

// Claim: the congruence exponent m+1 is sharp. At (p,m) = (3,4), units of
// Q_3 of level exactly 2 have v_3(norm - 1) = 5 exactly; `samples` seeded
// instances plus the scalar 10 and a level-3 control.
VerificationReport verify_sharpness(std::uint64_t seed, unsigned precision = 0,
                                    int samples = 20);

// One deterministic discriminant instance: K = Q_2(zeta_{2^m}), L/K
// unramified of degree n cut out by a monic integer lift of an irreducible
// polynomial over F_2.
struct DiscriminantCheck {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<std::int64_t> poly; // ascending coefficients, monic
    std::string disc;               // decimal, exact over Z
    bool primary_in_K = false;
    Valuation norm_level = Valuation::at_precision();
};

DiscriminantCheck discriminant_check(unsigned m, unsigned n,
                                     const std::vector<std::int64_t>& poly,
                                     unsigned precision = 0);

// Claim: such discriminants are 2-primary units of K and their absolute
// norms are = 1 mod 2^{m+1}. Draws seeded irreducible polynomials.
VerificationReport verify_discriminant(unsigned m, unsigned n, std::uint64_t seed,
                                       unsigned precision = 0);

// Claim: relative norms preserve p-primariness, checked down one layer of
// the cyclotomic tower (K_{m+1} to K_m) on seeded p-primary samples.
VerificationReport verify_primary_norm(std::uint64_t p, unsigned m, int samples,
                                       std::uint64_t seed, unsigned precision = 0);

// Claim: the norm carries units of K into U_m of Q_p, onto it in fact;
// checks the containment on seeded units and searches for a unit whose
// norm has level exactly m (Inconclusive if none within the cap).
VerificationReport verify_zetam(std::uint64_t p, unsigned m, int samples,
                                std::uint64_t seed, unsigned precision = 0);

// Claims about the norm image of the deep filtration: N(U_{p^m,K}) lies in
// U_{m+1}, a witness in U_{p^m-1,K} \ U_{p^m,K} escapes it, and the
// stepwise tower containments N(U_{r_i}) in U_{r_{i-1}} hold on samples.
VerificationReport verify_norm_containment(std::uint64_t p, unsigned m, int samples,
                                           std::uint64_t seed, unsigned precision = 0);

struct GridCell {
    std::uint64_t p;
    unsigned m;
};

// (2,1) (2,2) (2,3) (3,1) (3,2) (3,3) (3,4) (5,1) (5,2)
std::vector<GridCell> default_grid();

struct HarnessConfig {
    std::vector<GridCell> grid = default_grid();
    int samples = 100;
    std::uint64_t seed = kDefaultSeed;
    unsigned precision = 0; // 0: per-cell default m + 6
    // Injects a deliberately non-p-primary unit into the congruence check;
    // the resulting report must come out Fail. Negative-path testing only.
    bool negative_control = false;
};

// Deterministic report list over the whole grid, sorted by claim id and
// parameters. Cells are independent; any module error becomes a Fail entry
// and the run continues.
std::vector<VerificationReport> run_all(const HarnessConfig& config);

// Aggregate status: pass iff no report failed.
bool all_pass(const std::vector<VerificationReport>& reports);
bool any_inconclusive(const std::vector<VerificationReport>& reports);

} // namespace pprimary
