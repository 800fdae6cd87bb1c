#include "pprimary/primary.hpp"

#include "pprimary/padic.hpp"
#include "pprimary/sampling.hpp"

namespace pprimary {

PrimaryDecision is_p_primary(const CycloElement& alpha) {
    const FieldDescriptor& f = alpha.field();
    if (!alpha.is_unit())
        throw NotAUnitError("is_p_primary requires a unit of O_K");
    const std::int64_t boundary = static_cast<std::int64_t>(f.pm); // p * e_bar

    // Strip the prime-to-p root of unity part. The residue field is F_p, so
    // the Teichmueller lift omega is a (p-1)-th root of unity; omega^p =
    // omega makes it its own p-th power and it goes into the witness.
    PadicInt omega = teichmuller(
        PadicInt(f.prime, f.precision, alpha.residue_class()));
    CycloElement cur = alpha * CycloElement::from_scalar(f, invert(omega));
    CycloElement witness = CycloElement::from_scalar(f, omega);

    PrimaryDecision d{false, witness, cur, std::nullopt, {}};
    const CycloElement pi = CycloElement::pi(f);
    // The level strictly increases, so p^m iterations are more than enough.
    for (std::uint64_t iter = 0; iter <= f.pm + 1; ++iter) {
        Valuation lvl = unit_level_K(cur);
        if (!lvl.is_finite() || lvl.value() >= boundary) {
            d.verdict = true;
            d.witness_w = witness;
            d.residual_u = cur;
            return d;
        }
        const std::int64_t n = lvl.value();
        if (!d.peel_levels.empty() && n <= d.peel_levels.back())
            throw InternalInconsistencyError("peeling level failed to increase");
        d.peel_levels.push_back(n);
        if (n % static_cast<std::int64_t>(f.prime) != 0) {
            d.verdict = false;
            d.witness_w = witness;
            d.residual_u = cur;
            d.stuck_level = n;
            return d;
        }
        // Find c with cur * (1 + c pi^{n/p})^{-p} deeper in the filtration.
        const CycloElement pij = pi.pow(static_cast<std::uint64_t>(n) / f.prime);
        bool advanced = false;
        for (std::uint64_t c = 1; c < f.prime; ++c) {
            CycloElement g = CycloElement::one(f) +
                             CycloElement::from_integer(f, static_cast<std::int64_t>(c)) * pij;
            CycloElement cand = cur * invert_unit(g.pow(f.prime));
            Valuation lvl2 = unit_level_K(cand);
            if (lvl2.greater_than(n)) {
                cur = cand;
                witness = witness * g;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw InternalInconsistencyError(
                "no trial coefficient raised the peeling level");
    }
    throw InternalInconsistencyError("peeling failed to terminate");
}

CycloElement sample_p_primary(const FieldDescriptor& field, std::uint64_t seed) {
    Rng rng(seed);
    CycloElement u0 = CycloElement::one(field) +
                      CycloElement::pi(field).pow(field.pm) * random_element(field, rng);
    CycloElement w = random_unit(field, rng);
    return u0 * w.pow(field.prime);
}

bool primary_line_dimension_check(const FieldDescriptor& field, std::uint64_t seed,
                                  int pairs) {
    Rng rng(seed);
    const std::int64_t boundary = static_cast<std::int64_t>(field.pm);
    for (int t = 0; t < pairs; ++t) {
        // Exact level p^m guarantees a nontrivial class on the line.
        CycloElement u1 = unit_at_exact_level(field, boundary, rng);
        CycloElement u2 = t == 0 ? u1 : unit_at_exact_level(field, boundary, rng);
        const CycloElement u2inv = invert_unit(u2);
        bool found = false;
        for (std::uint64_t k = 0; k < field.prime && !found; ++k) {
            CycloElement q = u1 * u2inv.pow(k);
            // Trivial class at working precision: the product climbed past
            // the boundary, where everything is a p-th power.
            found = unit_level_K(q).greater_than(boundary);
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace pprimary
