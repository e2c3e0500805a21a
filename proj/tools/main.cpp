// Command-line driver: assemble bound constants, search parameters, verify
// the shifted Q inequalities, run the sampled property suites, and validate
// the bounds against zero data.
//
// Exit codes: 0 ok, 2 constraint violation, 3 config parse failure,
// 4 usage error, 5 coverage error, 6 property failure.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetacount/constants.hpp"
#include "zetacount/envelope.hpp"
#include "zetacount/errors.hpp"
#include "zetacount/gamma_error.hpp"
#include "zetacount/optimize.hpp"
#include "zetacount/params.hpp"
#include "zetacount/specfn.hpp"
#include "zetacount/zeros.hpp"
#include "zetacount/zeta_bounds.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConstraint = 2;
constexpr int kExitConfig = 3;
constexpr int kExitUsage = 4;
constexpr int kExitCoverage = 5;
constexpr int kExitProperty = 6;

zetacount::RunConfig load_config_or_exit(const std::string& path) {
    try {
        return zetacount::load_config(path);
    } catch (const zetacount::config_error& e) {
        std::cerr << "config error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        std::exit(kExitConfig);
    }
}

int run_constants(const std::string& config_path, const std::string& out_format,
                  bool round_up) {
    const auto cfg = load_config_or_exit(config_path);
    const auto report = zetacount::validate(cfg.params);
    if (!report.ok) {
        std::cerr << "constraint violation:";
        for (const auto& v : report.violations) std::cerr << " [" << v << "]";
        std::cerr << "\n";
        return kExitConstraint;
    }
    const auto bc = zetacount::assemble_constants(cfg.params, cfg.hyp);
    const zetacount::BoundConstants rows[] = {bc};
    if (out_format == "md") {
        std::cout << zetacount::constants_markdown(rows, round_up);
    } else {
        std::cout << zetacount::constants_csv(rows, round_up);
    }
    return kExitOk;
}

std::vector<zetacount::StartPoint> load_starts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw zetacount::config_error("cannot open starts file: " + path);
    std::vector<zetacount::StartPoint> starts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        zetacount::StartPoint s;
        if (!(row >> s.c >> s.r >> s.eta)) {
            throw zetacount::config_error("expected 'c r eta'", lineno);
        }
        starts.push_back(s);
    }
    return starts;
}

int run_optimize(const std::string& objective_spec, const std::string& starts_path,
                 long budget, unsigned seed, const std::string& config_path,
                 const std::string& trace_path) {
    if (budget < 100) {
        std::cerr << "usage error: --budget must be >= 100\n";
        return kExitUsage;
    }
    zetacount::Objective objective;
    if (objective_spec == "c1") {
        objective.mode = zetacount::ObjectiveMode::min_c1;
    } else if (objective_spec == "lex") {
        objective.mode = zetacount::ObjectiveMode::lex_c1_then_c3;
    } else if (objective_spec.rfind("weighted:", 0) == 0) {
        objective.mode = zetacount::ObjectiveMode::weighted_at_height;
        try {
            objective.t_eval = std::stod(objective_spec.substr(9));
        } catch (const std::exception&) {
            std::cerr << "usage error: bad weighted height\n";
            return kExitUsage;
        }
        if (!(objective.t_eval >= std::numbers::e)) {
            std::cerr << "usage error: weighted height must be >= e\n";
            return kExitUsage;
        }
    } else {
        std::cerr << "usage error: unknown objective '" << objective_spec << "'\n";
        return kExitUsage;
    }

    zetacount::ZetaLineHypotheses hyp;
    zetacount::OptimizeSettings settings;
    settings.budget = budget;
    settings.seed = seed;
    if (!config_path.empty()) {
        const auto cfg = load_config_or_exit(config_path);
        hyp = cfg.hyp;
        settings.T0 = cfg.params.T0;
        settings.J1 = cfg.params.J1;
        settings.J2 = cfg.params.J2;
    }

    std::vector<zetacount::StartPoint> starts;
    if (starts_path.empty()) {
        starts = zetacount::default_start_points();
    } else {
        try {
            starts = load_starts(starts_path);
        } catch (const zetacount::config_error& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return kExitConfig;
        }
    }

    const auto result = zetacount::optimize(objective, starts, hyp, settings);
    if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        trace << zetacount::trace_to_text(result);
    }
    const zetacount::BoundConstants rows[] = {result.best};
    std::cout << zetacount::constants_csv(rows, false);
    std::cout << "objective=" << std::setprecision(10) << result.objective_value
              << " evaluations=" << result.evaluations << "\n";
    return kExitOk;
}

int run_validate(const std::string& zeros_path, const std::string& heights_spec,
                 const std::string& constants_spec) {
    zetacount::ZeroList zl;
    try {
        zl = zetacount::ingest_zero_file(zeros_path);
    } catch (const zetacount::config_error& e) {
        std::cerr << "zero file error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return kExitConfig;
    }

    std::vector<double> heights;
    std::istringstream hs(heights_spec);
    std::string tok;
    while (std::getline(hs, tok, ',')) {
        if (tok.empty()) continue;
        try {
            heights.push_back(std::stod(tok));
        } catch (const std::exception&) {
            std::cerr << "usage error: bad height '" << tok << "'\n";
            return kExitUsage;
        }
    }
    if (heights.empty()) {
        std::cerr << "usage error: --heights requires at least one value\n";
        return kExitUsage;
    }

    std::optional<zetacount::BoundConstants> bc;
    if (constants_spec != "corollary") {
        const auto cfg = load_config_or_exit(constants_spec);
        bc = zetacount::assemble_constants(cfg.params, cfg.hyp);
    }

    try {
        const auto rows =
            zetacount::validate_bounds(zl, bc ? &*bc : nullptr, heights);
        std::cout << zetacount::bound_checks_csv(rows);
        for (const auto& row : rows) {
            if (!row.pass) return kExitProperty;
        }
        return kExitOk;
    } catch (const zetacount::coverage_error& e) {
        std::cerr << "coverage error: " << e.what() << "\n";
        return kExitCoverage;
    }
}

int run_verify_q(const std::string& config_path, double t_max) {
    if (!(t_max > 0.0)) {
        std::cerr << "usage error: --tmax must be positive\n";
        return kExitUsage;
    }
    zetacount::ZetaLineHypotheses hyp;
    double eta = 0.5;  // most stringent strip edge when no config is given
    if (!config_path.empty()) {
        const auto cfg = load_config_or_exit(config_path);
        hyp = cfg.hyp;
        eta = cfg.params.eta;
    }
    const auto grid = zetacount::make_q_grid(t_max);
    const auto verdict = zetacount::verify_q(hyp, eta, grid);
    for (const auto& check : verdict.checks) {
        std::cout << (check.pass() ? "[pass] " : "[FAIL] ") << check.name
                  << "  max ratio " << std::setprecision(8) << check.max_ratio
                  << " at t = " << check.argmax_t << "\n";
    }
    return verdict.pass ? kExitOk : kExitProperty;
}

// Sampled inequality suites; prints a witness and fails on any violation.
int run_check_properties(const std::string& config_path, int samples,
                         unsigned seed) {
    if (samples <= 0) {
        std::cerr << "usage error: --samples must be positive\n";
        return kExitUsage;
    }
    zetacount::RunConfig cfg;
    if (config_path.empty()) {
        cfg.params = {1.025253504, 1.182375395, 0.009944751381};
    } else {
        cfg = load_config_or_exit(config_path);
    }
    const auto& p = cfg.params;
    const auto& h = cfg.hyp;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int failures = 0;
    auto fail = [&failures](const std::string& what) {
        std::cout << "[FAIL] " << what << "\n";
        ++failures;
    };

    // (a) |zeta(s)| <= region bound, all six regions.  The bounds are
    // tightest exactly on the interpolation edges, so a deterministic sweep
    // along each edge abscissa runs alongside the random samples.
    {
        const double sigma_lo[6] = {1.0 + p.eta, 1.0, 0.5, 0.0, -p.eta, -5.0};
        const double sigma_hi[6] = {5.0, 1.0 + p.eta, 1.0, 0.5, 0.0, -p.eta};
        bool ok = true;
        auto check_point = [&](double sigma, double t) {
            const std::complex<double> s{sigma, t};
            const double lhs = std::abs(zetacount::zeta_complex(s));
            const double rhs = zetacount::zeta_upper_bound(s, h, p.eta);
            if (!(lhs <= rhs)) {
                std::ostringstream msg;
                msg << "region bound at s = " << sigma << " + " << t
                    << "i: |zeta| = " << lhs << " > bound = " << rhs;
                fail(msg.str());
                ok = false;
            }
        };
        const double edges[5] = {1.0 + p.eta, 1.0, 0.5, 0.0, -p.eta};
        for (double sigma : edges) {
            for (double t = 3.0; t <= 500.0 && ok; t += 0.5) check_point(sigma, t);
        }
        for (int region = 0; region < 6 && ok; ++region) {
            for (int i = 0; i < samples && ok; ++i) {
                const double u = unit(rng);
                const double sigma =
                    sigma_lo[region] + u * u * (sigma_hi[region] - sigma_lo[region]);
                check_point(sigma, 3.0 + unit(rng) * 497.0);
            }
        }
        if (ok) std::cout << "[pass] region bounds dominate |zeta| (edges swept)\n";
    }

    // (b) |g(T)| <= 1/(25T).
    {
        bool ok = true;
        for (int i = 0; i < samples && ok; ++i) {
            const double T = 5.0 / 7.0 + unit(rng) * 5000.0;
            if (!(std::abs(zetacount::g_of_T(T)) <= 1.0 / (25.0 * T))) {
                std::ostringstream msg;
                msg << "gamma-factor bound at T = " << T;
                fail(msg.str());
                ok = false;
            }
        }
        if (ok) std::cout << "[pass] |g(T)| <= 1/(25T)\n";
    }

    // (c) E monotone in d, positive, and the linear bound on [1/4, 5/8].
    {
        bool ok = true;
        for (int i = 0; i < samples && ok; ++i) {
            const double T = 5.0 / 7.0 + unit(rng) * 2000.0;
            double d1 = unit(rng) * 4.4999, d2 = unit(rng) * 4.4999;
            if (d1 > d2) std::swap(d1, d2);
            const double e1 = zetacount::E_of(T, d1), e2 = zetacount::E_of(T, d2);
            if (!(e1 > 0.0 && e1 <= e2)) {
                std::ostringstream msg;
                msg << "E monotonicity at T = " << T << ", d1 = " << d1
                    << ", d2 = " << d2;
                fail(msg.str());
                ok = false;
            }
            const double d = 0.25 + unit(rng) * 0.375;
            const double rhs =
                (640.0 * d - 112.0) / (1536.0 * (3.0 * T - 1.0)) + std::pow(2.0, -10.0);
            if (!(zetacount::E_of(T, d) / std::numbers::pi <= rhs)) {
                std::ostringstream msg;
                msg << "E linear bound at T = " << T << ", d = " << d;
                fail(msg.str());
                ok = false;
            }
        }
        if (ok) std::cout << "[pass] E(T,d) monotone and linearly bounded\n";
    }

    // (d) L_j <= L*_j/T and M_j <= L*_j/(2 T log T) for T >= T0.
    {
        bool ok = true;
        for (int i = 0; i < samples && ok; ++i) {
            const double theta = unit(rng) * std::numbers::pi;
            const double j = (i % 2 == 0) ? -1.0 : h.Q2;
            const double T = p.T0 * (1.0 + unit(rng) * 9.0);
            const double lt = zetacount::L_j(theta, j, T, p);
            const double mt = zetacount::M_j(theta, j, T, p);
            const double ls = zetacount::L_star_j(theta, j, p);
            if (!(lt <= ls / T) || !(mt <= ls / (2.0 * T * std::log(T)))) {
                std::ostringstream msg;
                msg << "L/L* domination at theta = " << theta << ", j = " << j
                    << ", T = " << T;
                fail(msg.str());
                ok = false;
            }
        }
        if (ok) std::cout << "[pass] L and M dominated by L*\n";
    }

    // (e) gamma-ratio inequality in the strip.
    {
        bool ok = true;
        for (int i = 0; i < samples && ok; ++i) {
            const double sigma = -0.5 + unit(rng);
            const double t = 0.01 + unit(rng) * 100.0;
            if (!zetacount::gamma_ratio_bound_holds({sigma, t})) {
                std::ostringstream msg;
                msg << "gamma ratio bound at s = " << sigma << " + " << t << "i";
                fail(msg.str());
                ok = false;
            }
        }
        if (ok) std::cout << "[pass] gamma-ratio inequality\n";
    }

    // (f) envelope domination of (1/N) log |f_N| on the circle.
    {
        bool ok = true;
        const double heights[3] = {50.0, 100.0, 500.0};
        const int powers[3] = {1, 2, 4};
        for (int i = 0; i < samples && ok; ++i) {
            const double theta = unit(rng) * std::numbers::pi;
            const double T = heights[i % 3];
            const int N = powers[(i / 3) % 3];
            const std::complex<double> s =
                p.c + p.r * std::exp(std::complex<double>{0.0, theta});
            const double lhs = std::log(std::abs(zetacount::f_N(s, T, N))) / N;
            const double rhs = zetacount::F_pointwise(theta, T, p, h);
            if (!(lhs <= rhs)) {
                std::ostringstream msg;
                msg << "envelope domination at theta = " << theta << ", T = " << T
                    << ", N = " << N << ": " << lhs << " > " << rhs;
                fail(msg.str());
                ok = false;
            }
        }
        if (ok) std::cout << "[pass] envelope dominates (1/N) log |f_N|\n";
    }

    std::cout << (failures == 0 ? "all property suites passed\n"
                                : "property failures detected\n");
    return failures == 0 ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit zero-counting bounds for the Riemann zeta function"};
    app.require_subcommand(1);

    auto* constants = app.add_subcommand("constants", "Assemble (C1, C2, C3, C3')");
    std::string config_path;
    std::string out_format = "csv";
    bool round_up = false;
    constants->add_option("--config", config_path, "parameter config file")->required();
    constants->add_option("--out", out_format, "output format: csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    constants->add_flag("--round-up", round_up, "round constants up at 1e-6");

    auto* optimize = app.add_subcommand("optimize", "Search (c, r, eta)");
    std::string objective_spec = "c1";
    std::string starts_path;
    long budget = 2000;
    unsigned seed = 1;
    std::string opt_config;
    std::string trace_path;
    optimize->add_option("--objective", objective_spec,
                         "objective: c1, weighted:T, or lex");
    optimize->add_option("--starts", starts_path, "start points file (c r eta rows)");
    optimize->add_option("--budget", budget, "objective evaluation budget");
    optimize->add_option("--seed", seed, "search seed");
    optimize->add_option("--config", opt_config, "hypotheses/T0/J config file");
    optimize->add_option("--trace", trace_path, "write accepted improvements here");

    auto* validate = app.add_subcommand("validate", "Check bounds against zero data");
    std::string zeros_path;
    std::string heights_spec;
    std::string constants_spec = "corollary";
    validate->add_option("--zeros", zeros_path, "zero ordinate file")->required();
    validate->add_option("--heights", heights_spec, "comma-separated heights")->required();
    validate->add_option("--constants", constants_spec,
                         "'corollary' or a config file path");

    auto* verify_q = app.add_subcommand("verify-q", "Verify the shifted Q inequalities");
    std::string vq_config;
    double vq_tmax = 5000.0;
    verify_q->add_option("--config", vq_config, "config file (hypotheses + eta)");
    verify_q->add_option("--tmax", vq_tmax, "upper end of the sample grid");

    auto* props = app.add_subcommand("check-properties", "Run the sampled inequality suites");
    std::string props_config;
    int samples = 500;
    unsigned props_seed = 1;
    props->add_option("--config", props_config, "config file");
    props->add_option("--samples", samples, "samples per suite");
    props->add_option("--seed", props_seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (constants->parsed()) return run_constants(config_path, out_format, round_up);
        if (optimize->parsed()) {
            return run_optimize(objective_spec, starts_path, budget, seed, opt_config,
                                trace_path);
        }
        if (validate->parsed()) return run_validate(zeros_path, heights_spec, constants_spec);
        if (verify_q->parsed()) return run_verify_q(vq_config, vq_tmax);
        if (props->parsed()) return run_check_properties(props_config, samples, props_seed);
    } catch (const zetacount::constraint_error& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const zetacount::coverage_error& e) {
        std::cerr << "coverage error: " << e.what() << "\n";
        return kExitCoverage;
    } catch (const zetacount::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
