#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pprimary/herbrand.hpp"
#include "pprimary/primary.hpp"
#include "pprimary/verify.hpp"
#include "report_io.hpp"

namespace {

using namespace pprimary;

struct Options {
    std::uint64_t p = 3;
    unsigned m = 2;
    unsigned n = 2;
    unsigned i = 2;
    int samples = 100;
    std::uint64_t seed = kDefaultSeed;
    unsigned precision = 0; // 0: per-field default m + 6
    std::string format = "text";
    std::string output;
    bool strict = false;
    bool negative_control = false;
    std::int64_t value = 0;
    std::int64_t quadratic = 0;
};

void write_out(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opt.output, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file " + opt.output);
    os << text;
    if (!os)
        throw std::runtime_error("failed writing " + opt.output);
}

int emit_reports(const Options& opt, const std::string& command,
                 std::vector<std::pair<std::string, std::string>> cfg_entries,
                 const std::vector<VerificationReport>& reports) {
    std::sort(cfg_entries.begin(), cfg_entries.end());
    if (opt.format == "json") {
        write_out(opt, reports_to_json(reports, EmitConfig{command, cfg_entries}));
    } else {
        write_out(opt, reports_to_text(reports));
    }
    if (!opt.strict && any_inconclusive(reports))
        std::cerr << "warning: inconclusive witness searches (pass with --strict to fail)\n";
    return exit_status(reports, opt.strict);
}

std::vector<std::pair<std::string, std::string>> common_cfg(const Options& opt) {
    return {{"samples", std::to_string(opt.samples)},
            {"seed", std::to_string(opt.seed)},
            {"precision", std::to_string(opt.precision)},
            {"strict", opt.strict ? "true" : "false"}};
}

int emit_value(const Options& opt, const std::string& command,
               std::vector<std::pair<std::string, std::string>> entries,
               const std::string& value) {
    if (opt.format == "json") {
        std::sort(entries.begin(), entries.end());
        std::string body = "{\n  \"command\": \"" + command + "\",\n";
        for (const auto& [k, v] : entries)
            body += "  \"" + k + "\": \"" + v + "\",\n";
        body += "  \"value\": \"" + value + "\",\n  \"version\": \"1\"\n}\n";
        write_out(opt, body);
    } else {
        write_out(opt, value + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic unit filtrations, Hasse-Herbrand functions and "
                 "norm-congruence checks for cyclotomic extensions of Q_p"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_samples = true) {
        sub->add_option("--seed", opt.seed, "RNG seed (default 1729)");
        sub->add_option("--precision", opt.precision,
                        "coefficient precision N (0 = per-field default m+6)")
            ->envname("PPRIMARY_PRECISION");
        sub->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", opt.output, "write the report to this path");
        sub->add_flag("--strict", opt.strict, "treat INCONCLUSIVE as failure");
        if (with_samples)
            sub->add_option("--samples", opt.samples, "samples per check");
    };

    auto* all = app.add_subcommand("verify-all", "run every claim check on the default grid");
    add_common(all);
    all->add_flag("--negative-control", opt.negative_control,
                  "inject a non-primary unit; the run must flag it");

    auto* vmain = app.add_subcommand("verify-main", "norm congruence for p-primary units");
    add_common(vmain);
    vmain->add_option("--p", opt.p, "prime")->required();
    vmain->add_option("--m", opt.m, "cyclotomic level")->required();

    auto* vsharp = app.add_subcommand("verify-sharpness", "exactness of the congruence exponent");
    add_common(vsharp);

    auto* vdisc = app.add_subcommand("verify-discriminant",
                                     "2-primariness of unramified-extension discriminants");
    add_common(vdisc, false);
    vdisc->add_option("--m", opt.m, "cyclotomic level of K = Q_2(zeta_{2^m})")->required();
    vdisc->add_option("--n", opt.n, "degree of the unramified extension")->required();

    auto* vlemma = app.add_subcommand("verify-lemma-norm",
                                      "relative norms preserve p-primariness");
    add_common(vlemma);
    vlemma->add_option("--p", opt.p, "prime")->required();
    vlemma->add_option("--m", opt.m, "target tower level")->required();

    auto* vzeta = app.add_subcommand("verify-zetam", "norm image of the unit group");
    add_common(vzeta);
    vzeta->add_option("--p", opt.p, "prime")->required();
    vzeta->add_option("--m", opt.m, "cyclotomic level")->required();

    auto* vcont = app.add_subcommand("verify-containment", "norm filtration containments");
    add_common(vcont);
    vcont->add_option("--p", opt.p, "prime")->required();
    vcont->add_option("--m", opt.m, "cyclotomic level")->required();

    auto* herb = app.add_subcommand("herbrand", "evaluate the cyclotomic tower transition function");
    add_common(herb, false);
    herb->add_option("--p", opt.p, "prime")->required();
    herb->add_option("--m", opt.m, "tower level")->required();
    herb->add_option("--i", opt.i, "argument")->required();

    auto* brk = app.add_subcommand("break", "ramification break of a tower step or quadratic extension");
    add_common(brk, false);
    brk->add_option("--p", opt.p, "prime (with --i)");
    auto* brk_i = brk->add_option("--i", opt.i, "tower step index (>= 2)");
    auto* brk_q = brk->add_option("--quadratic", opt.quadratic,
                                  "d in {-1,-5,2,-2,10,-10} for Q_2(sqrt d)");
    brk_i->excludes(brk_q);

    auto* ptest = app.add_subcommand("primary-test", "decide p-primariness of a scalar unit");
    add_common(ptest, false);
    ptest->add_option("--p", opt.p, "prime")->required();
    ptest->add_option("--m", opt.m, "cyclotomic level")->required();
    ptest->add_option("--value", opt.value, "integer unit to test")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (all->parsed()) {
            HarnessConfig cfg;
            cfg.samples = opt.samples;
            cfg.seed = opt.seed;
            cfg.precision = opt.precision;
            cfg.negative_control = opt.negative_control;
            auto entries = common_cfg(opt);
            std::string grid;
            for (const auto& c : cfg.grid)
                grid += (grid.empty() ? "" : " ") + std::to_string(c.p) + ":" +
                        std::to_string(c.m);
            entries.push_back({"grid", grid});
            return emit_reports(opt, "verify-all", entries, run_all(cfg));
        }
        if (vmain->parsed()) {
            auto entries = common_cfg(opt);
            entries.push_back({"p", std::to_string(opt.p)});
            entries.push_back({"m", std::to_string(opt.m)});
            return emit_reports(opt, "verify-main", entries,
                                {verify_main_congruence(opt.p, opt.m, opt.samples,
                                                        opt.seed, opt.precision)});
        }
        if (vsharp->parsed()) {
            return emit_reports(opt, "verify-sharpness", common_cfg(opt),
                                {verify_sharpness(opt.seed, opt.precision, opt.samples)});
        }
        if (vdisc->parsed()) {
            auto entries = common_cfg(opt);
            entries.push_back({"m", std::to_string(opt.m)});
            entries.push_back({"n", std::to_string(opt.n)});
            return emit_reports(opt, "verify-discriminant", entries,
                                {verify_discriminant(opt.m, opt.n, opt.seed,
                                                     opt.precision)});
        }
        if (vlemma->parsed()) {
            auto entries = common_cfg(opt);
            entries.push_back({"p", std::to_string(opt.p)});
            entries.push_back({"m", std::to_string(opt.m)});
            return emit_reports(opt, "verify-lemma-norm", entries,
                                {verify_primary_norm(opt.p, opt.m, opt.samples,
                                                     opt.seed, opt.precision)});
        }
        if (vzeta->parsed()) {
            auto entries = common_cfg(opt);
            entries.push_back({"p", std::to_string(opt.p)});
            entries.push_back({"m", std::to_string(opt.m)});
            return emit_reports(opt, "verify-zetam", entries,
                                {verify_zetam(opt.p, opt.m, opt.samples, opt.seed,
                                              opt.precision)});
        }
        if (vcont->parsed()) {
            auto entries = common_cfg(opt);
            entries.push_back({"p", std::to_string(opt.p)});
            entries.push_back({"m", std::to_string(opt.m)});
            return emit_reports(opt, "verify-containment", entries,
                                {verify_norm_containment(opt.p, opt.m, opt.samples,
                                                         opt.seed, opt.precision)});
        }
        if (herb->parsed()) {
            const std::int64_t v = tower_eval(cyclotomic_tower(opt.p, opt.m),
                                              static_cast<std::int64_t>(opt.i));
            return emit_value(opt, "herbrand",
                              {{"p", std::to_string(opt.p)},
                               {"m", std::to_string(opt.m)},
                               {"i", std::to_string(opt.i)}},
                              std::to_string(v));
        }
        if (brk->parsed()) {
            if (brk_q->count()) {
                return emit_value(opt, "break",
                                  {{"quadratic", std::to_string(opt.quadratic)}},
                                  std::to_string(quadratic_break(opt.quadratic)));
            }
            if (!brk_i->count()) {
                std::cerr << "break requires either --i or --quadratic\n";
                return 2;
            }
            return emit_value(opt, "break",
                              {{"p", std::to_string(opt.p)},
                               {"i", std::to_string(opt.i)}},
                              std::to_string(break_numeric(opt.p, opt.i, opt.precision)));
        }
        if (ptest->parsed()) {
            const unsigned N = opt.precision ? opt.precision : default_precision(opt.m);
            const FieldDescriptor f = make_field(opt.p, opt.m, N);
            const CycloElement alpha = CycloElement::from_integer(f, opt.value);
            const PrimaryDecision d = is_p_primary(alpha);
            if (opt.format == "json") {
                std::string body = "{\n  \"command\": \"primary-test\",\n";
                body += "  \"m\": \"" + std::to_string(opt.m) + "\",\n";
                body += "  \"p\": \"" + std::to_string(opt.p) + "\",\n";
                body += "  \"residual_level\": \"" +
                        unit_level_K(d.residual_u).to_string() + "\",\n";
                body += "  \"stuck_level\": " +
                        (d.stuck_level ? "\"" + std::to_string(*d.stuck_level) + "\""
                                       : std::string("null")) +
                        ",\n";
                body += "  \"value\": \"" + std::to_string(opt.value) + "\",\n";
                body += "  \"verdict\": " + std::string(d.verdict ? "true" : "false") +
                        ",\n  \"version\": \"1\"\n}\n";
                write_out(opt, body);
            } else {
                std::string text = std::string("p-primary: ") +
                                   (d.verdict ? "true" : "false") + "\n";
                if (d.stuck_level)
                    text += "stuck_level: " + std::to_string(*d.stuck_level) + "\n";
                else
                    text += "residual_level: " + unit_level_K(d.residual_u).to_string() +
                            " (boundary " + std::to_string(f.pm) + ")\n";
                text += "witness_w: " + d.witness_w.to_string() + "\n";
                write_out(opt, text);
            }
            return 0;
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const RangeError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const NotAUnitError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
