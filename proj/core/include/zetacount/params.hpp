#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace zetacount {

// Contour description for the zero-counting argument: a disk of radius r
// centred at c, a strip half-width eta, and the derived abscissa sigma1 and
// offset delta.  sigma1 and delta are always computed from (c, r), never set.
struct ContourParams {
    double c = 0.0;
    double r = 0.0;
    double eta = 0.0;
    double T0 = 30'610'046'000.0;  // height threshold the constants are assembled for
    int J1 = 64;                   // node count of the kappa1 quadrature sum
    int J2 = 39;                   // node count of the kappa2 quadrature sum

    double sigma1() const { return c + (c - 0.5) * (c - 0.5) / r; }
    double delta() const { return 2.0 * c - sigma1() - 0.5; }
};

// Constants of the assumed bounds |zeta(1+it)| <= c1 (log t)^c2 for t >= t0
// and |zeta(1/2+it)| <= k1 t^k2 (log t)^k3 for t >= t1, together with the
// shift constants Q0..Q5 that extend them to all t.
struct ZetaLineHypotheses {
    double c1 = 1.0;
    double c2 = 1.0;
    double t0 = 3.0;
    double k1 = 0.77;
    double k2 = 1.0 / 6.0;
    double k3 = 1.0;
    double t1 = 3.0;
    double Q0 = 1.0;
    double Q1 = 1.18;
    double Q2 = 1.18;
    double Q3 = 3.9;
    double Q4 = 2.3;
    double Q5 = 3.9;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Angle at which the circle c + r e^{i theta} crosses the vertical line
// Re s = y; 0 if the circle lies left of the line, pi if right of it.
// Monotone nonincreasing in y, continuous across both branch points.
double theta_split(const ContourParams& params, double y);
double theta_split(double c, double r, double y);

// Checks the full admissibility chain
//   -1/2 < c-r < 1-c < -eta < 1/4 <= delta < 1/2 < 1+eta < sigma1 < c+r,
// 0 < eta <= 1/2, theta_{1+eta} <= 2.1, r > 2c-1, and T0 >= e.  Violations
// are reported by name; they are data, not failures.
ValidationReport validate(const ContourParams& params);

// Checks Q4 >= 1, Q2 = max{Q0, Q1}, Q5 = max{Q3, Q4}, and the stated
// ranges of the line-bound constants.
ValidationReport validate(const ZetaLineHypotheses& hyp);

struct RunConfig {
    ContourParams params;
    ZetaLineHypotheses hyp;
};

// Plain-text "key = value" configuration, one pair per line, '#' comments.
// Keys: c, r, eta, T0, J1, J2, c1, c2, t0, k1, k2, k3, t1, Q0..Q5.
// c, r, eta are required; the rest default as above.  Throws config_error
// (with the offending line number) on malformed or unknown keys.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace zetacount
