#include "pprimary/herbrand.hpp"

#include <algorithm>

#include "pprimary/cyclo.hpp"
#include "pprimary/padic.hpp"

namespace pprimary {

namespace {

std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r *= base;
    return r;
}

} // namespace

std::int64_t step_eval(const HerbrandStep& step, std::int64_t i) {
    if (i < 0)
        throw RangeError("herbrand functions are defined on non-negative integers");
    if (const auto* t = std::get_if<TameStep>(&step)) {
        if (t->degree < 1)
            throw RangeError("tame step degree must be positive");
        return t->degree * i;
    }
    const auto& w = std::get<WildStep>(step);
    if (w.break_s < 1 || w.p < 2)
        throw RangeError("wild step requires p >= 2 and break >= 1");
    if (i < w.break_s)
        return i;
    return w.break_s * (1 - w.p) + w.p * i;
}

std::int64_t tower_eval(const HerbrandFunction& h, std::int64_t i) {
    std::int64_t v = i;
    for (const auto& step : h.steps)
        v = step_eval(step, v);
    return v;
}

std::int64_t tower_eval_trace(const HerbrandFunction& h, std::int64_t i,
                              std::vector<std::int64_t>& inputs) {
    inputs.clear();
    std::int64_t v = i;
    for (const auto& step : h.steps) {
        inputs.push_back(v);
        v = step_eval(step, v);
    }
    return v;
}

HerbrandFunction cyclotomic_tower(std::uint64_t p, unsigned m) {
    if (!detail::is_small_prime(p))
        throw ConfigError("p must be prime");
    if (m < 1)
        throw ConfigError("tower level m must be at least 1");
    HerbrandFunction h;
    h.steps.push_back(TameStep{static_cast<std::int64_t>(p) - 1});
    for (unsigned j = 2; j <= m; ++j)
        h.steps.push_back(WildStep{static_cast<std::int64_t>(p),
                                   ipow(static_cast<std::int64_t>(p), j - 1) - 1});
    return h;
}

std::int64_t closed_form(std::uint64_t p, unsigned m, unsigned n) {
    if (m < 1 || n < 1 || n > m)
        throw RangeError("closed_form requires 1 <= n <= m");
    const std::int64_t P = static_cast<std::int64_t>(p);
    const std::int64_t M = m, N = n;
    return (M - (N - 1)) * ipow(P, n) - (M - N) * ipow(P, n - 1) - 1;
}

std::vector<std::int64_t> r_sequence(std::uint64_t p, unsigned m) {
    if (m < 1)
        throw RangeError("r_sequence requires m >= 1");
    const std::int64_t P = static_cast<std::int64_t>(p);
    const std::int64_t M = m;
    std::vector<std::int64_t> r(m);
    for (unsigned i = 1; i <= m; ++i)
        r[i - 1] = (M - i + 1) * ipow(P, i) - (M - i) * ipow(P, i - 1);
    return r;
}

std::int64_t break_numeric(std::uint64_t p, unsigned i, unsigned precision) {
    if (i < 2)
        throw RangeError("break_numeric requires i >= 2 (a wild tower step)");
    const unsigned N = precision == 0 ? i + 6 : precision;
    FieldDescriptor f = make_field(p, i, N);
    // sigma(pi)/pi for sigma: zeta -> zeta^a with a = 1 + p^{i-1}. The
    // quotient is the geometric sum 1 + zeta + ... + zeta^{a-1}, so no
    // division is needed.
    const std::uint64_t a = 1 + f.e_bar;
    const CycloElement zeta = CycloElement::zeta(f);
    CycloElement q = CycloElement::zero(f);
    CycloElement zp = CycloElement::one(f);
    for (std::uint64_t j = 0; j < a; ++j) {
        q = q + zp;
        zp = zp * zeta;
    }
    Valuation s = unit_level_K(q);
    if (!s.is_finite())
        throw PrecisionExhaustedError("ramification break unresolved at this precision");
    return s.value();
}

namespace {

// Arithmetic in Q_2[x]/(x^2 - d): pairs a + b x with p-adic coordinates.
struct Quad {
    PadicInt a, b;
};

constexpr unsigned kQuadPrecision = 20;

Quad quad_mul(const Quad& u, const Quad& v, const PadicInt& d) {
    return {u.a * v.a + d * (u.b * v.b), u.a * v.b + u.b * v.a};
}

// v_L(a + b x) = v_2(a^2 - d b^2): the valuation through the norm, exact
// for the totally ramified quadratic extensions handled here.
Valuation quad_val(const Quad& u, const PadicInt& d) {
    return vp(u.a * u.a - d * (u.b * u.b));
}

// Exact division of a residue by 2^k, dropping k digits of precision.
PadicInt shift_down(const PadicInt& x, std::int64_t k) {
    if (!vp(x).at_least(k))
        throw InternalInconsistencyError("inexact division by 2^k");
    return PadicInt(2, x.precision() - static_cast<unsigned>(k),
                    x.residue() >> k);
}

} // namespace

std::int64_t quadratic_break(std::int64_t d) {
    const bool listed = d == -1 || d == -5 || d == 2 || d == -2 || d == 10 || d == -10;
    if (!listed)
        throw RangeError("quadratic_break is defined for d in {-1,-5,2,-2,10,-10}");
    const unsigned N = kQuadPrecision;
    const PadicInt dd = PadicInt::from_integer(2, N, d);
    const PadicInt one = PadicInt::one(2, N);
    const PadicInt zero = PadicInt::zero(2, N);
    // pi = x when v_2(d) = 1, else pi = 1 + x; sigma sends x to -x.
    const bool even = d % 2 == 0;
    const Quad pi = even ? Quad{zero, one} : Quad{one, one};
    const Quad sigma_pi{pi.a, -pi.b};
    // sigma(pi)/pi = sigma(pi)^2 / N(pi) with N(pi) = pi * sigma(pi), a
    // scalar of valuation 1: divide by 2 exactly, then by the odd part.
    const Quad num = quad_mul(sigma_pi, sigma_pi, dd);
    const PadicInt norm_pi = pi.a * pi.a - dd * (pi.b * pi.b);
    const std::int64_t v2 = vp(norm_pi).value();
    const PadicInt odd = shift_down(norm_pi, v2);
    const PadicInt inv = invert(odd);
    Quad q{shift_down(num.a, v2) * inv, shift_down(num.b, v2) * inv};
    const unsigned Nq = q.a.precision();
    const Quad qm1{q.a - PadicInt::one(2, Nq), q.b};
    Valuation s = quad_val(qm1, PadicInt::from_integer(2, Nq, d));
    if (!s.is_finite())
        throw PrecisionExhaustedError("quadratic break unresolved");
    return s.value();
}

} // namespace pprimary
