#include "zetacount/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "zetacount/specfn.hpp"

namespace zetacount {

namespace {

using Point = std::array<double, 3>;  // (c, r, eta)

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective values ordered lexicographically so the lex mode needs no
// scalarization hack.
struct Value {
    double primary = kInf;
    double secondary = 0.0;
    bool operator<(const Value& o) const {
        if (primary != o.primary) return primary < o.primary;
        return secondary < o.secondary;
    }
};

ContourParams to_params(const Point& x, const OptimizeSettings& s) {
    ContourParams p;
    p.c = x[0];
    p.r = x[1];
    p.eta = x[2];
    p.T0 = s.T0;
    p.J1 = s.J1;
    p.J2 = s.J2;
    return p;
}

struct Evaluator {
    const Objective& objective;
    const ZetaLineHypotheses& hyp;
    const OptimizeSettings& settings;
    long budget_cap = 0;
    long evaluations = 0;
    Value best_value;
    BoundConstants best_constants;
    Point best_point{};
    bool have_best = false;
    std::vector<TraceEntry> trace;

    bool budget_left() const { return evaluations < budget_cap; }

    Value evaluate(const Point& x) {
        ++evaluations;
        const ContourParams p = to_params(x, settings);
        if (!validate(p).ok) {
            return {};  // infinite penalty; constants are never assembled here
        }
        const BoundConstants bc = assemble_constants(p, hyp);
        Value v;
        switch (objective.mode) {
            case ObjectiveMode::min_c1:
                v = {bc.C1, 0.0};
                break;
            case ObjectiveMode::weighted_at_height:
                v = {n_bound(objective.t_eval, bc), 0.0};
                break;
            case ObjectiveMode::lex_c1_then_c3:
                v = {bc.C1, bc.C3};
                break;
        }
        if (!have_best || v < best_value) {
            have_best = true;
            best_value = v;
            best_constants = bc;
            best_point = x;
            trace.push_back({evaluations, x[0], x[1], x[2], bc.C1, bc.C2, bc.C3,
                             bc.C3_prime, v.primary});
        }
        return v;
    }
};

// Classic Nelder-Mead on the 3-simplex; the infinite penalty simply loses
// every comparison, which keeps the simplex inside the feasible set.
void nelder_mead(Evaluator& ev, const Point& start, double scale_jitter) {
    struct Vertex {
        Point x;
        Value v;
    };
    std::array<Vertex, 4> simplex;
    simplex[0] = {start, ev.evaluate(start)};
    const double steps[3] = {0.004 * scale_jitter, 0.02 * scale_jitter,
                             std::max(0.25 * start[2], 1e-7) * scale_jitter};
    for (int i = 0; i < 3; ++i) {
        Point x = start;
        x[i] += steps[i];
        simplex[i + 1] = {x, ev.evaluate(x)};
    }

    auto centroid_excluding_worst = [&simplex]() {
        Point c{0.0, 0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            for (int d = 0; d < 3; ++d) c[d] += simplex[i].x[d];
        }
        for (int d = 0; d < 3; ++d) c[d] /= 3.0;
        return c;
    };
    auto blend = [](const Point& a, const Point& b, double t) {
        Point out;
        for (int d = 0; d < 3; ++d) out[d] = a[d] + t * (b[d] - a[d]);
        return out;
    };

    while (ev.budget_left()) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.v < b.v; });
        // Converged when the simplex has collapsed.
        double spread = 0.0;
        for (int d = 0; d < 3; ++d) {
            spread = std::max(spread, std::abs(simplex[3].x[d] - simplex[0].x[d]));
        }
        if (spread < 1e-12) break;

        const Point centroid = centroid_excluding_worst();
        const Point reflected = blend(centroid, simplex[3].x, -1.0);
        const Value v_r = ev.evaluate(reflected);
        if (v_r < simplex[0].v) {
            if (!ev.budget_left()) {
                simplex[3] = {reflected, v_r};
                break;
            }
            const Point expanded = blend(centroid, simplex[3].x, -2.0);
            const Value v_e = ev.evaluate(expanded);
            simplex[3] = v_e < v_r ? Vertex{expanded, v_e} : Vertex{reflected, v_r};
        } else if (v_r < simplex[2].v) {
            simplex[3] = {reflected, v_r};
        } else {
            if (!ev.budget_left()) break;
            const bool outside = v_r < simplex[3].v;
            const Point contracted =
                blend(centroid, outside ? reflected : simplex[3].x, 0.5);
            const Value v_c = ev.evaluate(contracted);
            if (v_c < (outside ? v_r : simplex[3].v)) {
                simplex[3] = {contracted, v_c};
            } else {
                // Shrink toward the best vertex.
                for (int i = 1; i < 4; ++i) {
                    if (!ev.budget_left()) return;
                    simplex[i].x = blend(simplex[0].x, simplex[i].x, 0.5);
                    simplex[i].v = ev.evaluate(simplex[i].x);
                }
            }
        }
    }
}

// Walk an infeasible start toward the anchor until validation passes.
bool project_to_feasible(Point& x, const OptimizeSettings& s) {
    const Point anchor{1.025253504, 1.182375395, 0.009944751381};
    if (validate(to_params(x, s)).ok) return true;
    double lo = 0.0, hi = 1.0;  // blend fraction toward the anchor
    Point candidate = x;
    bool found = false;
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        for (int d = 0; d < 3; ++d) candidate[d] = x[d] + mid * (anchor[d] - x[d]);
        if (validate(to_params(candidate, s)).ok) {
            found = true;
            hi = mid;  // feasible: try to stay closer to the original
        } else {
            lo = mid;
        }
    }
    if (!found) return false;
    for (int d = 0; d < 3; ++d) x[d] = x[d] + hi * (anchor[d] - x[d]);
    return validate(to_params(x, s)).ok;
}

}  // namespace

std::vector<StartPoint> default_start_points() {
    return {
        {1.000011314, 1.064340602, 4.2826451e-6},
        {1.0001, 1.06, 1e-5},
        {1.025253504, 1.182375395, 0.009944751381},
        {1.035766557, 1.229059659, 0.014325507360},
    };
}

OptimizeResult optimize(const Objective& objective,
                        const std::vector<StartPoint>& starts,
                        const ZetaLineHypotheses& hyp,
                        const OptimizeSettings& settings) {
    if (settings.budget < 100) {
        throw std::invalid_argument("optimize requires budget >= 100");
    }
    if (objective.mode == ObjectiveMode::weighted_at_height &&
        !(objective.t_eval >= std::numbers::e)) {
        throw std::invalid_argument("weighted objective requires t_eval >= e");
    }
    if (starts.empty()) {
        throw std::invalid_argument("optimize requires at least one start point");
    }

    std::vector<Point> feasible_starts;
    for (const auto& s : starts) {
        Point x{s.c, s.r, s.eta};
        if (project_to_feasible(x, settings)) {
            feasible_starts.push_back(x);
        }
    }
    if (feasible_starts.empty()) {
        throw std::runtime_error(
            "optimize: no start point is feasible and projection failed");
    }

    Evaluator ev{objective, hyp, settings};
    std::mt19937 rng(settings.seed);
    std::uniform_real_distribution<double> jitter(0.9, 1.1);
    const long per_start =
        settings.budget / static_cast<long>(feasible_starts.size());
    for (std::size_t i = 0; i < feasible_starts.size(); ++i) {
        // Equal budget slices; the final start also absorbs the remainder.
        ev.budget_cap = (i + 1 == feasible_starts.size())
                            ? settings.budget
                            : static_cast<long>(i + 1) * per_start;
        nelder_mead(ev, feasible_starts[i], jitter(rng));
        if (ev.evaluations >= settings.budget) break;
    }

    OptimizeResult out;
    out.best_params = to_params(ev.best_point, settings);
    out.best = ev.best_constants;
    out.objective_value = ev.best_value.primary;
    out.objective_secondary = ev.best_value.secondary;
    out.evaluations = ev.evaluations;
    out.trace = std::move(ev.trace);
    return out;
}

std::pair<int, int> refine_node_counts(const ContourParams& params, double tol) {
    // kappa alone grows toward its limiting integral as J refines; the
    // quantity that actually shrinks is the full segment bound including
    // the 1/J end term, so the doubling criterion runs on that.
    const double pi = std::numbers::pi;
    const double log_zeta_c = std::log(zeta_real(params.c));
    const double th_1c = theta_split(params, 1.0 - params.c);
    auto bound1 = [&](int J) { return kappa1(params, J) + pi / (4.0 * J) * log_zeta_c; };
    auto bound2 = [&](int J) {
        return kappa2(params, J) + (pi - th_1c) / (2.0 * J) * log_zeta_c;
    };

    int J1 = std::max(1, params.J1);
    double b1 = bound1(J1);
    while (J1 < (1 << 14)) {
        const double next = bound1(2 * J1);
        if (std::abs(next - b1) < tol * std::max(1.0, std::abs(b1))) break;
        J1 *= 2;
        b1 = next;
    }
    int J2 = std::max(1, params.J2);
    double b2 = bound2(J2);
    while (J2 < (1 << 14)) {
        const double next = bound2(2 * J2);
        if (std::abs(next - b2) < tol * std::max(1.0, std::abs(b2))) break;
        J2 *= 2;
        b2 = next;
    }
    return {J1, J2};
}

std::string trace_to_text(const OptimizeResult& result) {
    std::string out;
    char line[256];
    for (const auto& t : result.trace) {
        std::snprintf(line, sizeof(line),
                      "%ld %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g\n",
                      t.evaluation, t.c, t.r, t.eta, t.C1, t.C2, t.C3, t.C3_prime,
                      t.objective);
        out += line;
    }
    return out;
}

}  // namespace zetacount
