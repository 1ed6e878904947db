#pragma once

// Command-line front end. run_cli() is kept separate from main() so the
// tests can drive it with captured streams.

#include "verify_suite.hpp"
#include "vocabulary.hpp"

#include <monoratio/json_io.hpp>
#include <monoratio/monoratio.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace monoratio::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDisagree = 2, kNonconvergence = 3 };

struct Output {
    std::ostream& out;
    std::string format;

    void verdict(json j, const std::optional<Agreement>& ag)
    {
        if (ag)
            j["crosscheck"] = to_json(*ag);
        if (format == "json") {
            out << j.dump(2) << "\n";
            return;
        }
        out << "pattern,turning_point,provenance,crosscheck\n";
        const auto& tp = j["turning_point"];
        out << j["pattern"].get<std::string>() << ','
            << (tp.is_null() ? std::string() : (tp.is_string() ? tp.get<std::string>() : csv_number(tp.get<double>())))
            << ',' << j["provenance"].get<std::string>() << ',' << (ag ? std::string(to_string(ag->status)) : "")
            << "\n";
    }
};

inline int exit_for(const std::optional<Agreement>& ag)
{
    return ag && ag->disagrees() ? kDisagree : kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monotonicity of series and transform ratios"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path;
    std::optional<std::string> format;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // classify-gamma
    auto* cg = app.add_subcommand("classify-gamma", "region and pattern of Gamma(ct+d)/Gamma(at+b)");
    double ga = 0, gb = 0, gc = 0, gd = 0;
    bool cg_verify = false;
    double cg_lo = 1e-3, cg_hi = 50.0;
    cg->add_option("a", ga)->required();
    cg->add_option("b", gb)->required();
    cg->add_option("c", gc)->required();
    cg->add_option("d", gd)->required();
    cg->add_flag("--verify", cg_verify, "cross-check against the sampling oracle");
    cg->add_option("--lo", cg_lo, "oracle interval start");
    cg->add_option("--hi", cg_hi, "oracle interval end");

    // predict
    auto* pr = app.add_subcommand("predict", "monotonicity verdict for a ratio");
    pr->require_subcommand(1);
    pr->fallthrough();
    std::string kernel;
    bool verify = false;
    std::optional<double> v_lo, v_hi;
    auto common = [&](CLI::App* s) {
        s->add_option("--kernel", kernel, "kernel family")->required();
        s->add_flag("--verify", verify, "cross-check against the sampling oracle");
        s->add_option("--lo", v_lo, "oracle / fallback interval start");
        s->add_option("--hi", v_hi, "oracle / fallback interval end");
    };
    auto* ps = pr->add_subcommand("series", "A(t)/B(t) = sum a_k w_k(t) / sum b_k w_k(t)");
    std::string a_spec, b_spec;
    double radius = kInf;
    common(ps);
    ps->add_option("--a", a_spec, "numerator coefficients")->required();
    ps->add_option("--b", b_spec, "denominator coefficients")->required();
    ps->add_option("--r", radius, "domain (0, r)");

    auto* pt = pr->add_subcommand("transform", "F(x)/G(x) = int f w / int g w over [alpha, beta]");
    std::string f_spec, g_spec;
    double alpha = 0.0, beta = kInf;
    common(pt);
    pt->add_option("--f", f_spec, "numerator integrand")->required();
    pt->add_option("--g", g_spec, "denominator integrand")->required();
    pt->add_option("--alpha", alpha, "lower integration limit");
    pt->add_option("--beta", beta, "upper integration limit");

    auto* pd = pr->add_subcommand("de", "ratio of reciprocal-gamma series or transforms, numerator (a, b)");
    double da = 0, db = 0, dc = 0, dd = 0;
    bool de_transform = false;
    common(pd);
    pd->add_option("a", da)->required();
    pd->add_option("b", db)->required();
    pd->add_option("c", dc)->required();
    pd->add_option("d", dd)->required();
    pd->add_flag("--transform", de_transform, "use the continuous kernel of that name");
    pd->add_option("--r", radius, "domain (0, r) for discrete kernels");

    // lt-order
    auto* lt = app.add_subcommand("lt-order", "Laplace-transform-ratio order between X and Y");
    std::string x_spec, y_spec;
    bool test_mode = false;
    lt->add_option("--x", x_spec, "distribution of X")->required();
    lt->add_option("--y", y_spec, "distribution of Y")->required();
    lt->add_flag("--test-mode", test_mode, "also run the grid check when a theorem condition fires");

    // verify-suite
    auto* vs = app.add_subcommand("verify-suite", "randomized draws checked against the oracle");
    std::optional<std::uint64_t> seed;
    std::optional<int> draws;
    std::string csv_path;
    vs->add_option("--seed", seed, "random seed");
    vs->add_option("--draws", draws, "draws per region");
    vs->add_option("--out", csv_path, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (!config_path.empty())
            cfg = load_config_file(config_path, cfg);
        if (format)
            cfg.format = *format;
        if (seed)
            cfg.seed = *seed;
        if (draws)
            cfg.draws_per_region = *draws;
        cfg.validate();
        Output o{out, cfg.format};

        PredictOptions po;
        po.horizon = cfg.horizon;
        po.max_horizon = cfg.max_horizon;
        po.ladder.zero_band = cfg.h_zero_band;
        po.fallback_n = cfg.fallback_n;
        po.lo = v_lo;
        po.hi = v_hi;

        if (*cg) {
            const Region region = classify_region(ga, gb, gc, gd);
            const MonotonicityVerdict v = gamma_ratio_pattern(ga, gb, gc, gd);
            json j;
            j["region"] = std::string(to_string(region));
            j["psi_expression"] = number_to_json(psi_expression(ga, gb, gc, gd).value);
            const json vj = to_json(v);
            for (const auto& [k, val] : vj.items())
                j[k] = val;
            std::optional<Agreement> ag;
            if (cg_verify) {
                const ObservedPattern obs =
                    gamma_ratio_oracle(ga, gb, gc, gd, cg_lo, cg_hi, cfg.oracle_n, cfg.oracle_noise_floor);
                ag = crosscheck(v, obs);
            }
            if (cfg.format == "csv") {
                out << "region,";
                std::ostringstream tmp;
                Output{tmp, "csv"}.verdict(j, ag);
                const std::string s = tmp.str();
                const auto nl = s.find('\n');
                out << s.substr(0, nl + 1) << to_string(region) << ',' << s.substr(nl + 1);
            } else {
                o.verdict(j, ag);
            }
            return exit_for(ag);
        }

        if (*pr) {
            std::optional<Agreement> ag;
            MonotonicityVerdict v;
            if (*ps) {
                SeriesRatioProblem p;
                p.a = parse_coefficients(a_spec);
                p.b = parse_coefficients(b_spec);
                p.family = parse_discrete_kernel(kernel, radius);
                p.tol = cfg.series_tol;
                v = predict_series_ratio(p, po);
                if (verify) {
                    const auto [lo, hi] = detail::series_fallback_interval(p, po);
                    ag = crosscheck(v, detect_pattern([&](double t) { return eval_series_ratio(p, t); }, lo, hi,
                                                      std::min(cfg.oracle_n, 1024), cfg.oracle_noise_floor,
                                                      Spacing::Log));
                }
            } else if (*pt) {
                TransformRatioProblem p;
                p.f = parse_integrand(f_spec);
                p.g = parse_integrand(g_spec);
                p.kernel = parse_continuous_kernel(kernel, alpha, beta);
                p.tol = cfg.quad_tol;
                v = predict_transform_ratio(p, po);
                if (verify) {
                    const auto [lo, hi] = detail::transform_fallback_interval(po);
                    ag = crosscheck(v, detect_pattern([&](double x) { return eval_transform_ratio(p, x); }, lo, hi,
                                                      std::min(cfg.oracle_n, 512), cfg.oracle_noise_floor,
                                                      Spacing::Log));
                }
            } else {
                AnyKernel k = de_transform ? AnyKernel{parse_continuous_kernel(kernel, 0.0, kInf)}
                                           : AnyKernel{parse_discrete_kernel(kernel, radius)};
                v = predict_de_ratio(da, db, dc, dd, k, po);
                if (verify) {
                    if (de_transform) {
                        const auto p = de_transform_problem(da, db, dc, dd, std::get<ContinuousKernel>(k));
                        const auto [lo, hi] = detail::transform_fallback_interval(po);
                        ag = crosscheck(v, detect_pattern([&](double x) { return eval_transform_ratio(p, x); }, lo,
                                                          hi, 512, cfg.oracle_noise_floor, Spacing::Log));
                    } else {
                        const auto p = de_series_problem(da, db, dc, dd, std::get<DiscreteKernelFamily>(k));
                        const auto [lo, hi] = detail::series_fallback_interval(p, po);
                        ag = crosscheck(v, detect_pattern([&](double t) { return eval_series_ratio(p, t); }, lo, hi,
                                                          1024, cfg.oracle_noise_floor, Spacing::Log));
                    }
                }
            }
            o.verdict(to_json(v), ag);
            return exit_for(ag);
        }

        if (*lt) {
            const RandomVariableModel X = parse_distribution(x_spec);
            const RandomVariableModel Y = parse_distribution(y_spec);
            OrderOptions oo;
            oo.always_fallback = test_mode;
            oo.fallback_n = cfg.fallback_n;
            oo.predict = po;
            const OrderVerdict v = lt_ratio_order(X, Y, oo);
            if (cfg.format == "json") {
                out << to_json(v).dump(2) << "\n";
            } else {
                out << "relation,provenance,fallback_relation\n"
                    << to_string(v.relation) << ',' << v.provenance << ','
                    << (v.fallback_relation ? std::string(to_string(*v.fallback_relation)) : "") << "\n";
            }
            return test_mode && v.theorem_contradicted() ? kDisagree : kOk;
        }

        if (*vs) {
            SuiteSummary s;
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                if (!f)
                    throw usage_error("cannot write " + csv_path);
                s = run_verify_suite(cfg, f, err);
            } else {
                s = run_verify_suite(cfg, out, err);
            }
            return s.disagreements() == 0 ? kOk : kDisagree;
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const monoratio::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const nonconvergence_error& e) {
        err << "nonconvergence: " << e.what() << "\n";
        return kNonconvergence;
    } catch (const evaluation_error& e) {
        err << "nonconvergence: " << e.what() << "\n";
        return kNonconvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNonconvergence;
    }
    return kUsage;
}

} // namespace monoratio::cli
