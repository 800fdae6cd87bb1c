#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pprimary/cyclo.hpp"
#include "pprimary/rng.hpp"

namespace pprimary {

/**
 * Verdict of the p-primary test, with a checkable witness.
 *
 * When verdict is true, input = residual_u * witness_w^p at working
 * precision and residual_u lies in U_{p^m,K}; the input's class modulo
 * p-th powers therefore sits on the line that cuts out the unramified
 * degree-p extension.
 *
 * When verdict is false, stuck_level holds the filtration level at which
 * peeling stopped: finite, below p^m, and not divisible by p.
 */
struct PrimaryDecision {
    bool verdict = false;
    CycloElement witness_w;
    CycloElement residual_u;
    std::optional<std::int64_t> stuck_level;
    // Unit levels visited while peeling, strictly increasing. Diagnostic.
    std::vector<std::int64_t> peel_levels;
};

/**
 * Decide whether a unit alpha of O_K is p-primary by p-th-power peeling.
 *
 * The Teichmueller part of alpha (a (p-1)-th root of unity, hence itself a
 * p-th power) is stripped first. Then, as long as the current level n is
 * below p^m and divisible by p, a factor (1 + c pi^{n/p})^p with c found by
 * exhaustive trial over 1..p-1 raises the level; it is folded into the
 * witness. Reaching level >= p^m proves the class lies on the distinguished
 * line; sticking at a level prime to p disproves it.
 *
 * Throws NotAUnitError for non-units, PrecisionExhaustedError when a level
 * cannot be resolved, InternalInconsistencyError if no trial coefficient
 * raises the level (impossible over F_p; would indicate a bug).
 */
PrimaryDecision is_p_primary(const CycloElement& alpha);

// A seeded p-primary unit u0 * w^p with u0 in U_{p^m,K} and w a random
// unit. p-primary by construction.
CycloElement sample_p_primary(const FieldDescriptor& field, std::uint64_t seed);

// Witnesses, on `pairs` seeded samples, that the classes of U_{p^m,K}
// modulo p-th powers form a single F_p-line: for u1, u2 of exact level p^m
// some u1 * u2^{-k} (0 <= k < p) is a p-th power at working precision.
bool primary_line_dimension_check(const FieldDescriptor& field, std::uint64_t seed,
                                  int pairs = 20);

} // namespace pprimary
