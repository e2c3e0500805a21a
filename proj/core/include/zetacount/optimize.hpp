#pragma once

#include <string>
#include <vector>

#include "zetacount/constants.hpp"
#include "zetacount/params.hpp"

namespace zetacount {

enum class ObjectiveMode {
    min_c1,              // minimize C1
    weighted_at_height,  // minimize C1 log T + C2 log log T + C3 at T = t_eval
    lex_c1_then_c3,      // minimize (C1, C3) lexicographically
};

struct Objective {
    ObjectiveMode mode = ObjectiveMode::min_c1;
    double t_eval = 0.0;  // used by weighted_at_height only, must be >= e then
};

struct StartPoint {
    double c = 0.0, r = 0.0, eta = 0.0;
};

struct TraceEntry {
    long evaluation = 0;
    double c = 0.0, r = 0.0, eta = 0.0;
    double C1 = 0.0, C2 = 0.0, C3 = 0.0, C3_prime = 0.0;
    double objective = 0.0;
};

struct OptimizeResult {
    ContourParams best_params;
    BoundConstants best;
    double objective_value = 0.0;
    double objective_secondary = 0.0;  // C3 under lexicographic mode
    long evaluations = 0;
    std::vector<TraceEntry> trace;  // one entry per accepted improvement
};

struct OptimizeSettings {
    double T0 = 30'610'046'000.0;
    int J1 = 64;
    int J2 = 39;
    long budget = 2000;  // total objective evaluations, >= 100
    unsigned seed = 1;
};

// Derivative-free simplex search over (c, r, eta) with an infinite penalty
// outside the admissible parameter region, multi-started from the given
// points.
// Infeasible starts are projected toward a feasible anchor; throws
// std::runtime_error if no start can be made feasible, std::invalid_argument
// if budget < 100.  Deterministic for a fixed seed and start list.
OptimizeResult optimize(const Objective& objective,
                        const std::vector<StartPoint>& starts,
                        const ZetaLineHypotheses& hyp,
                        const OptimizeSettings& settings);

// Shipped default start list (the three reference parameter rows plus a
// near-boundary probe).
std::vector<StartPoint> default_start_points();

// Doubles J until the marginal change of the full segment bound (kappa
// plus its 1/J end term) drops below tol; returns the refined (J1, J2).
std::pair<int, int> refine_node_counts(const ContourParams& params, double tol = 1e-6);

// Serialize the trace, one line per accepted improvement.
std::string trace_to_text(const OptimizeResult& result);

}  // namespace zetacount
