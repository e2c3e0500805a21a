#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "zetacount/params.hpp"

namespace zetacount {

enum class ZetaRegion {
    sigma_above_one_plus_eta,
    one_to_one_plus_eta,
    half_to_one,
    zero_to_half,
    minus_eta_to_zero,
    below_minus_eta,
};

// Integer closest to x, ties resolved toward 0.
int nearest_int(double x);

// Proved upper bound for |zeta(s)|, selected by sigma = Re s among the six
// strips; at a shared boundary abscissa the smaller of the two adjacent
// bounds is returned.
double zeta_upper_bound(std::complex<double> s, const ZetaLineHypotheses& hyp,
                        double eta);

// True iff |Gamma(1/2 - s/2) / Gamma(s/2)| <= (|1+s|/2)^{1/2 - sigma},
// for -1/2 <= Re s <= 1/2.
bool gamma_ratio_bound_holds(std::complex<double> s);

// f_N(s) = ((s+iT-1) zeta(s+iT))^N/2 + ((s-iT-1) zeta(s-iT))^N/2.
// N <= 8; bases with modulus above 1e30 trip the overflow guard.
std::complex<double> f_N(std::complex<double> s, double T, int N);

struct QInequalityCheck {
    std::string name;
    double max_ratio = 0.0;   // max over the grid of (left side)/(right side)
    double argmax_t = 0.0;
    bool pass() const { return max_ratio <= 1.0; }
};

struct QVerification {
    std::vector<QInequalityCheck> checks;
    bool pass = true;
};

// Evaluates each of the five shifted inequalities behind Q0..Q5 over the
// sample grid and reports the worst left/right ratio.  eta enters only the
// sigma = -eta line check.
QVerification verify_q(const ZetaLineHypotheses& hyp, double eta,
                       std::span<const double> grid);

// Grid with step fine_step up to t_split and coarse_step up to t_max,
// starting at 0 (the t = 0 entries are evaluated as limits).
std::vector<double> make_q_grid(double t_max = 5000.0, double t_split = 50.0,
                                double fine_step = 0.01, double coarse_step = 0.1);

}  // namespace zetacount
