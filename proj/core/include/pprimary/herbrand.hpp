#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pprimary/errors.hpp"

namespace pprimary {

/**
 * Piecewise-linear integer transition functions of the unit filtration.
 *
 * A tame step of degree n sends i to n*i. A wild step of degree p with
 * ramification break s sends i to i below s and to s(1-p) + p*i from s on.
 * A tower composes steps bottom-first (the step closest to Q_p is applied
 * first), which is the order that reproduces the explicit filtration
 * computations this library verifies.
 *
 * All of this is exact integer arithmetic; no precision model is involved.
 */
struct TameStep {
    std::int64_t degree; // >= 1; degree 1 is the explicit identity step
};

struct WildStep {
    std::int64_t p;       // residue characteristic, the step degree
    std::int64_t break_s; // ramification break, >= 1
};

using HerbrandStep = std::variant<TameStep, WildStep>;

struct HerbrandFunction {
    std::vector<HerbrandStep> steps; // bottom extension first
};

std::int64_t step_eval(const HerbrandStep& step, std::int64_t i);

// Composition bottom step first; h(0) = 0 and h is strictly increasing.
std::int64_t tower_eval(const HerbrandFunction& h, std::int64_t i);

// As tower_eval, but also records the input fed to each step (the trace lets
// callers assert that every wild step was applied at or above its break).
std::int64_t tower_eval_trace(const HerbrandFunction& h, std::int64_t i,
                              std::vector<std::int64_t>& inputs);

// The tower of Q_p(zeta_{p^j}) over Q_p: one tame step of degree p-1 (the
// identity when p = 2), then wild steps with breaks p^{j-1} - 1 for
// j = 2..m.
HerbrandFunction cyclotomic_tower(std::uint64_t p, unsigned m);

// (m-(n-1)) p^n - (m-n) p^{n-1} - 1: the value of the first n steps of the
// cyclotomic tower at input m. Throws RangeError unless 1 <= n <= m.
std::int64_t closed_form(std::uint64_t p, unsigned m, unsigned n);

// r_i = (m-i+1) p^i - (m-i) p^{i-1} for i = 1..m; note r_i = closed_form + 1
// and r_m = p^m.
std::vector<std::int64_t> r_sequence(std::uint64_t p, unsigned m);

// The ramification break of Q_p(zeta_{p^i}) / Q_p(zeta_{p^{i-1}}), measured
// numerically: the unit level of sigma(pi)/pi for pi = zeta - 1 and sigma
// the generator zeta -> zeta^{1+p^{i-1}}. Requires i >= 2. precision = 0
// selects the default i + 6.
std::int64_t break_numeric(std::uint64_t p, unsigned i, unsigned precision = 0);

// Ramification break of the quadratic extension Q_2(sqrt(d)) for d in
// {-1, -5, 2, -2, 10, -10}: the unit level of sigma(pi)/pi computed in
// Q_2[x]/(x^2 - d) with pi = x when v_2(d) = 1 and pi = 1 + x otherwise.
std::int64_t quadratic_break(std::int64_t d);

} // namespace pprimary
