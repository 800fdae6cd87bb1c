#include "pprimary/verify.hpp"

#include <algorithm>
#include <chrono>

#include <gmpxx.h>

#include "pprimary/herbrand.hpp"
#include "pprimary/primary.hpp"
#include "pprimary/rng.hpp"
#include "pprimary/sampling.hpp"
#include "resultant.hpp"

namespace pprimary {

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Pass:
        return "PASS";
    case Outcome::Fail:
        return "FAIL";
    case Outcome::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::pair<std::string, std::string>>
make_params(std::vector<std::pair<std::string, std::string>> kv) {
    std::sort(kv.begin(), kv.end());
    return kv;
}

void fail_with(VerificationReport& r, std::string input, std::string observed,
               std::string expected) {
    r.outcome = Outcome::Fail;
    r.observations.push_back({std::move(input), std::move(observed), std::move(expected)});
}

// Runs the body, converting any library error into a Fail entry so that a
// full-grid run continues past a broken cell.
template <class Fn>
VerificationReport guarded(VerificationReport r, Fn&& body) {
    const auto t0 = Clock::now();
    try {
        body(r);
    } catch (const Error& e) {
        fail_with(r, "internal", e.what(), "no error");
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

std::string dec(std::uint64_t v) { return std::to_string(v); }

} // namespace

std::vector<GridCell> default_grid() {
    return {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}};
}

VerificationReport verify_main_congruence(std::uint64_t p, unsigned m, int samples,
                                          std::uint64_t seed, unsigned precision) {
    const unsigned N = precision ? precision : default_precision(m);
    VerificationReport r{"norm-congruence",
                         make_params({{"p", dec(p)},
                                      {"m", dec(m)},
                                      {"samples", dec(samples)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        const FieldDescriptor f = make_field(p, m, N);
        const std::int64_t want = static_cast<std::int64_t>(m) + 1;
        std::int64_t min_seen = -1;
        for (int i = 0; i < samples; ++i) {
            CycloElement alpha = sample_p_primary(f, derive_seed(seed, p, m, i));
            Valuation lvl = unit_level(absolute_norm(alpha));
            if (!lvl.at_least(want)) {
                fail_with(rep, "sample " + std::to_string(i) + ": " + alpha.to_string(),
                          "norm level " + lvl.to_string(),
                          "norm level >= " + std::to_string(want));
                continue;
            }
            if (lvl.is_finite() && (min_seen < 0 || lvl.value() < min_seen))
                min_seen = lvl.value();
        }
        if (rep.outcome == Outcome::Pass)
            rep.observations.push_back(
                {dec(samples) + " seeded p-primary units",
                 "all norm levels >= " + std::to_string(want) +
                     (min_seen >= 0 ? " (min " + std::to_string(min_seen) + ")"
                                    : " (all at precision)"),
                 "norm level >= " + std::to_string(want)});
    });
}

VerificationReport verify_sharpness(std::uint64_t seed, unsigned precision, int samples) {
    const unsigned N = precision ? precision : default_precision(4);
    VerificationReport r{"sharpness",
                         make_params({{"p", "3"},
                                      {"m", "4"},
                                      {"samples", dec(samples)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        if (N < 8)
            throw ConfigError("sharpness check needs precision >= 8");
        const unsigned degree = 54; // [Q_3(zeta_81) : Q_3]
        auto norm_level_of = [&](const PadicInt& a) {
            return unit_level(a.pow(degree));
        };

        // The concrete instance: alpha = 10, a unit of level exactly 2.
        PadicInt ten(3, N, 10);
        Valuation v10 = norm_level_of(ten);
        if (!v10.exactly(5))
            fail_with(rep, "alpha = 10", "v_3(alpha^54 - 1) = " + v10.to_string(),
                      "exactly 5");
        else
            rep.observations.push_back(
                {"alpha = 10", "v_3(alpha^54 - 1) = 5", "exactly 5"});

        // Its norm through the field agrees with the scalar power.
        const FieldDescriptor f = make_field(3, 4, N);
        PadicInt through_field = absolute_norm(CycloElement::from_scalar(f, ten));
        if (through_field != ten.pow(degree))
            fail_with(rep, "alpha = 10", "N_K(alpha) != alpha^54",
                      "norm of a scalar is its 54th power");

        Rng rng(derive_seed(seed, 3, 4, 0));
        for (int i = 0; i < samples; ++i) {
            PadicInt alpha = padic_unit_at_exact_level(3, N, 2, rng);
            Valuation v = norm_level_of(alpha);
            if (!v.exactly(5))
                fail_with(rep, "alpha = " + alpha.to_string(),
                          "v_3(alpha^54 - 1) = " + v.to_string(), "exactly 5");
        }
        if (rep.outcome == Outcome::Pass)
            rep.observations.push_back({dec(samples) + " seeded units of level exactly 2",
                                        "v_3(alpha^54 - 1) = 5 for all", "exactly 5"});

        // Control: one level deeper the exponent is no longer sharp.
        PadicInt ctrl(3, N, 28);
        Valuation vc = norm_level_of(ctrl);
        if (!vc.at_least(6))
            fail_with(rep, "control alpha = 28 (level 3)",
                      "v_3(alpha^54 - 1) = " + vc.to_string(), ">= 6");
        else
            rep.observations.push_back({"control alpha = 28 (level 3)",
                                        "v_3(alpha^54 - 1) = " + vc.to_string(), ">= 6"});
    });
}

namespace {

// Dense F_2[x] helpers on bitmasks (bit i = coefficient of x^i).
unsigned f2_degree(std::uint32_t f) {
    unsigned d = 0;
    while (f >> (d + 1))
        ++d;
    return d;
}

std::uint32_t f2_mod(std::uint32_t f, std::uint32_t g) {
    const unsigned dg = f2_degree(g);
    while (f != 0) {
        const unsigned df = f2_degree(f);
        if (df < dg)
            break;
        f ^= g << (df - dg);
    }
    return f;
}

bool f2_irreducible(std::uint32_t f, unsigned n) {
    if (n == 0 || (f & 1) == 0)
        return false;
    for (unsigned d = 1; 2 * d <= n; ++d)
        for (std::uint32_t g = std::uint32_t(1) << d; g < (std::uint32_t(2) << d); ++g)
            if (f2_mod(f, g) == 0)
                return false;
    return true;
}

std::string poly_to_string(const std::vector<std::int64_t>& poly) {
    std::string s;
    for (std::size_t i = poly.size(); i-- > 0;) {
        if (poly[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0 || poly[i] != 1)
            s += std::to_string(poly[i]);
        if (i >= 1) {
            if (poly[i] != 1)
                s += "*";
            s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace

DiscriminantCheck discriminant_check(unsigned m, unsigned n,
                                     const std::vector<std::int64_t>& poly,
                                     unsigned precision) {
    if (m < 1 || n < 2)
        throw RangeError("discriminant_check requires m >= 1, n >= 2");
    if (poly.size() != n + 1 || poly[n] != 1)
        throw RangeError("polynomial must be monic of degree n");
    std::uint32_t mask = 0;
    for (unsigned i = 0; i <= n; ++i)
        mask |= static_cast<std::uint32_t>(((poly[i] % 2) + 2) % 2) << i;
    if (!f2_irreducible(mask, n))
        throw RangeError("polynomial is reducible modulo 2");

    std::vector<mpz_class> fz(n + 1);
    for (unsigned i = 0; i <= n; ++i)
        fz[i] = static_cast<long>(poly[i]);
    const mpz_class disc = detail::integer_discriminant(fz);
    if (mpz_odd_p(disc.get_mpz_t()) == 0)
        throw InternalInconsistencyError("discriminant of an irreducible residue is odd");

    const unsigned N = precision ? precision : default_precision(m);
    const FieldDescriptor K = make_field(2, m, N);
    mpz_class mod(static_cast<unsigned long>(K.modulus)), red;
    mpz_mod(red.get_mpz_t(), disc.get_mpz_t(), mod.get_mpz_t());
    const PadicInt disc2(2, N, mpz_get_ui(red.get_mpz_t()));

    DiscriminantCheck out;
    out.m = m;
    out.n = n;
    out.poly = poly;
    out.disc = disc.get_str();
    out.primary_in_K = is_p_primary(CycloElement::from_scalar(K, disc2)).verdict;
    // [K : Q_2] = 2^{m-1}, so the absolute norm of a scalar is this power.
    std::uint64_t deg = 1;
    for (unsigned i = 1; i < m; ++i)
        deg *= 2;
    out.norm_level = unit_level(disc2.pow(deg));
    return out;
}

VerificationReport verify_discriminant(unsigned m, unsigned n, std::uint64_t seed,
                                       unsigned precision) {
    const unsigned N = precision ? precision : default_precision(m);
    VerificationReport r{"discriminant-2primary",
                         make_params({{"m", dec(m)},
                                      {"n", dec(n)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        Rng rng(derive_seed(seed, 2, m, n));
        std::uint32_t mask = 0;
        bool found = false;
        for (int attempt = 0; attempt < 500 && !found; ++attempt) {
            mask = (std::uint32_t(1) << n) | 1 |
                   (static_cast<std::uint32_t>(rng.next()) & ((std::uint32_t(1) << n) - 2));
            found = f2_irreducible(mask, n);
        }
        if (!found)
            throw PrecisionExhaustedError("no irreducible polynomial found");
        std::vector<std::int64_t> poly(n + 1);
        for (unsigned i = 0; i <= n; ++i)
            poly[i] = (mask >> i) & 1;

        DiscriminantCheck chk = discriminant_check(m, n, poly, N);
        const std::int64_t want = static_cast<std::int64_t>(m) + 1;
        if (!chk.primary_in_K)
            fail_with(rep, "f = " + poly_to_string(poly), "disc " + chk.disc +
                      " not 2-primary in K", "2-primary");
        if (!chk.norm_level.at_least(want))
            fail_with(rep, "f = " + poly_to_string(poly),
                      "norm level " + chk.norm_level.to_string(),
                      "norm level >= " + std::to_string(want));
        if (rep.outcome == Outcome::Pass)
            rep.observations.push_back(
                {"f = " + poly_to_string(poly), "disc = " + chk.disc +
                     ", 2-primary, norm level " + chk.norm_level.to_string(),
                 "2-primary and norm level >= " + std::to_string(want)});
    });
}

VerificationReport verify_primary_norm(std::uint64_t p, unsigned m, int samples,
                                       std::uint64_t seed, unsigned precision) {
    const unsigned N = precision ? precision : default_precision(m + 1);
    VerificationReport r{"primary-norm-stability",
                         make_params({{"p", dec(p)},
                                      {"m", dec(m)},
                                      {"samples", dec(samples)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        const FieldDescriptor up = make_field(p, m + 1, N);
        const std::int64_t want = static_cast<std::int64_t>(m) + 1;
        for (int i = 0; i < samples; ++i) {
            CycloElement alpha = sample_p_primary(up, derive_seed(seed, p, m, i));
            CycloElement beta = relative_norm(alpha, m);
            PrimaryDecision dec_b = is_p_primary(beta);
            if (!dec_b.verdict) {
                fail_with(rep, "sample " + std::to_string(i) + ": " + alpha.to_string(),
                          "relative norm not p-primary (stuck at " +
                              (dec_b.stuck_level ? std::to_string(*dec_b.stuck_level)
                                                 : std::string("?")) +
                              ")",
                          "p-primary relative norm");
                continue;
            }
            // Cross-module coherence: the declared-primary norm satisfies
            // the absolute congruence in K_m as well.
            Valuation lvl = unit_level(absolute_norm(beta));
            if (!lvl.at_least(want))
                fail_with(rep, "sample " + std::to_string(i),
                          "norm level " + lvl.to_string(),
                          "norm level >= " + std::to_string(want));
        }
        // A p-th power upstairs has a p-th power norm: trivially primary.
        Rng rng(derive_seed(seed, p, m, 0xfeed));
        CycloElement w = random_unit(up, rng);
        PrimaryDecision dec_w = is_p_primary(relative_norm(w.pow(p), m));
        if (!dec_w.verdict)
            fail_with(rep, "w^p for seeded unit w", "relative norm not p-primary",
                      "p-th powers stay p-primary");
        if (rep.outcome == Outcome::Pass)
            rep.observations.push_back(
                {dec(samples) + " seeded p-primary units of the level-" +
                     dec(m + 1) + " field",
                 "all relative norms p-primary with norm level >= " +
                     std::to_string(want),
                 "p-primary norms"});
    });
}

VerificationReport verify_zetam(std::uint64_t p, unsigned m, int samples,
                                std::uint64_t seed, unsigned precision) {
    const unsigned N = precision ? precision : default_precision(m);
    VerificationReport r{"cyclotomic-norm-image",
                         make_params({{"p", dec(p)},
                                      {"m", dec(m)},
                                      {"samples", dec(samples)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        const FieldDescriptor f = make_field(p, m, N);
        const std::int64_t want = m;
        Rng rng(derive_seed(seed, p, m, 1));
        bool witness = false;
        std::string witness_str;
        for (int i = 0; i < samples; ++i) {
            CycloElement u = random_unit(f, rng);
            Valuation lvl = unit_level(absolute_norm(u));
            if (!lvl.at_least(want)) {
                fail_with(rep, "sample " + std::to_string(i) + ": " + u.to_string(),
                          "norm level " + lvl.to_string(),
                          "norm level >= " + std::to_string(want));
                continue;
            }
            if (!witness && lvl.exactly(want)) {
                witness = true;
                witness_str = u.to_string();
            }
        }
        // Surjectivity side: some unit must attain level exactly m.
        for (int extra = 0; !witness && extra < kWitnessCap; ++extra) {
            CycloElement u = random_unit(f, rng);
            if (unit_level(absolute_norm(u)).exactly(want)) {
                witness = true;
                witness_str = u.to_string();
            }
        }
        if (rep.outcome == Outcome::Pass) {
            rep.observations.push_back({dec(samples) + " seeded units",
                                        "all norm levels >= " + std::to_string(want),
                                        "norm level >= " + std::to_string(want)});
            if (witness)
                rep.observations.push_back({"witness " + witness_str,
                                            "norm level exactly " + std::to_string(want),
                                            "some unit attains level m"});
            else
                rep.outcome = Outcome::Inconclusive;
        }
    });
}

VerificationReport verify_norm_containment(std::uint64_t p, unsigned m, int samples,
                                           std::uint64_t seed, unsigned precision) {
    const unsigned N = precision ? precision : default_precision(m);
    VerificationReport r{"norm-filtration",
                         make_params({{"p", dec(p)},
                                      {"m", dec(m)},
                                      {"samples", dec(samples)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        const FieldDescriptor f = make_field(p, m, N);
        const std::int64_t boundary = static_cast<std::int64_t>(f.pm);
        const std::int64_t want = static_cast<std::int64_t>(m) + 1;
        Rng rng(derive_seed(seed, p, m, 2));

        // Containment: N(U_{p^m,K}) inside U_{m+1}.
        for (int i = 0; i < samples; ++i) {
            CycloElement u = principal_unit_at_least(f, boundary, rng);
            Valuation lvl = unit_level(absolute_norm(u));
            if (!lvl.at_least(want))
                fail_with(rep, "sample " + std::to_string(i) + " in U_{p^m}",
                          "norm level " + lvl.to_string(),
                          "norm level >= " + std::to_string(want));
        }

        // Non-containment witness: some u of level exactly p^m - 1 has norm
        // level exactly m.
        bool witness = false;
        std::string witness_str;
        for (int i = 0; !witness && i < kWitnessCap; ++i) {
            CycloElement u = unit_at_exact_level(f, boundary - 1, rng);
            if (unit_level(absolute_norm(u)).exactly(m)) {
                witness = true;
                witness_str = u.to_string();
            }
        }

        // Stepwise tower containments N(U_{r_i}) inside U_{r_{i-1}}.
        const std::vector<std::int64_t> rs = r_sequence(p, m);
        const int step_samples = std::min(samples, 10);
        for (unsigned i = m; i >= 2; --i) {
            const FieldDescriptor Ki = make_field(p, i, N);
            for (int t = 0; t < step_samples; ++t) {
                CycloElement u = principal_unit_at_least(Ki, rs[i - 1], rng);
                Valuation lvl = unit_level_K(relative_norm(u, i - 1));
                if (!lvl.at_least(rs[i - 2]))
                    fail_with(rep, "tower step " + dec(i) + " sample " + std::to_string(t),
                              "relative norm level " + lvl.to_string(),
                              "level >= " + std::to_string(rs[i - 2]));
            }
        }
        {
            const FieldDescriptor K1 = make_field(p, 1, N);
            for (int t = 0; t < step_samples; ++t) {
                CycloElement u = principal_unit_at_least(K1, rs[0], rng);
                Valuation lvl = unit_level(absolute_norm(u));
                if (!lvl.at_least(want))
                    fail_with(rep, "bottom step sample " + std::to_string(t),
                              "norm level " + lvl.to_string(),
                              "level >= " + std::to_string(want));
            }
        }

        if (rep.outcome == Outcome::Pass) {
            rep.observations.push_back(
                {dec(samples) + " samples of U_{p^m} and " + dec(step_samples) +
                     " per tower step",
                 "all containments hold", "norm filtration containments"});
            if (witness)
                rep.observations.push_back(
                    {"witness " + witness_str,
                     "level " + std::to_string(boundary - 1) + ", norm level exactly " +
                         dec(m),
                     "norm escapes U_{m+1} below level p^m"});
            else
                rep.outcome = Outcome::Inconclusive;
        }
    });
}

namespace {

VerificationReport negative_control_report(std::uint64_t seed, unsigned precision) {
    const std::uint64_t p = 3;
    const unsigned m = 2;
    const unsigned N = precision ? precision : default_precision(m);
    VerificationReport r{"negative-control",
                         make_params({{"p", dec(p)},
                                      {"m", dec(m)},
                                      {"seed", dec(seed)},
                                      {"precision", dec(N)}}),
                         Outcome::Pass,
                         {},
                         0.0};
    return guarded(std::move(r), [&](VerificationReport& rep) {
        const FieldDescriptor f = make_field(p, m, N);
        Rng rng(derive_seed(seed, p, m, 3));
        // Deliberately feed a non-p-primary unit to the congruence check;
        // the report must flag it.
        for (int i = 0; i < kWitnessCap; ++i) {
            CycloElement u = unit_at_exact_level(f, static_cast<std::int64_t>(f.pm) - 1,
                                                 rng);
            Valuation lvl = unit_level(absolute_norm(u));
            if (lvl.exactly(m)) {
                fail_with(rep, "injected non-primary " + u.to_string(),
                          "norm level exactly " + dec(m),
                          "norm level >= " + dec(m + 1) + " (deliberately violated)");
                return;
            }
        }
        rep.outcome = Outcome::Inconclusive;
        rep.observations.push_back({"injection search", "no witness found",
                                    "a non-primary unit with shallow norm"});
    });
}

} // namespace

std::vector<VerificationReport> run_all(const HarnessConfig& config) {
    std::vector<VerificationReport> out;
    for (const GridCell& cell : config.grid) {
        const std::uint64_t s = derive_seed(config.seed, cell.p, cell.m);
        out.push_back(verify_main_congruence(cell.p, cell.m, config.samples, s,
                                             config.precision));
        out.push_back(verify_zetam(cell.p, cell.m, config.samples, s, config.precision));
        out.push_back(verify_norm_containment(cell.p, cell.m, config.samples, s,
                                              config.precision));
        // The relative-norm stability claim needs the next tower level to
        // stay desk-sized.
        std::uint64_t up = 1;
        for (unsigned i = 0; i <= cell.m; ++i)
            up *= cell.p;
        if (up <= 32)
            out.push_back(verify_primary_norm(cell.p, cell.m, config.samples, s,
                                              config.precision));
    }
    if (!config.grid.empty()) {
        out.push_back(verify_sharpness(config.seed, config.precision ? config.precision : 0,
                                       20));
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned n = 2; n <= 4; ++n)
                out.push_back(verify_discriminant(m, n, derive_seed(config.seed, 2, m, n),
                                                  config.precision));
    }
    if (config.negative_control)
        out.push_back(negative_control_report(config.seed, config.precision));

    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  if (a.claim_id != b.claim_id)
                      return a.claim_id < b.claim_id;
                  return a.parameters < b.parameters;
              });
    return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::none_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.outcome == Outcome::Fail;
    });
}

bool any_inconclusive(const std::vector<VerificationReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.outcome == Outcome::Inconclusive;
    });
}

} // namespace pprimary
