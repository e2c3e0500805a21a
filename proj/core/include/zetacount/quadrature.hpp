#pragma once

#include <functional>

namespace zetacount {

// Exact value of the integral of (a + b*sigma(theta)) over [theta_lo,
// theta_hi] with sigma(theta) = c + r cos(theta):
//   (a + b c)(hi - lo) + b r (sin hi - sin lo).
double integral_linear(double a, double b, double theta_lo, double theta_hi,
                       double c, double r);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // accumulated local error estimates
    bool converged = true;
};

// Adaptive bisection on an embedded Gauss(7)/Kronrod(15) pair.  The Kronrod
// nodes are interior, so integrable endpoint singularities (log zeta near
// sigma = 1) are never evaluated at the endpoint.  Deterministic: fixed
// subdivision order, fixed reduction order.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double theta_lo, double theta_hi,
                                    double abs_tol = 1e-11);

}  // namespace zetacount
