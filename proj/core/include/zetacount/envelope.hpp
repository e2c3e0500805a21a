#pragma once

#include "zetacount/params.hpp"

namespace zetacount {

// L_j(theta) = log[ ((j+c+r cos th)^2 + (|r sin th|+T)^2) / T^2 ] and the
// log-log analogue M_j; both vanish when the shifted point sits at height T.
double L_j(double theta, double j, double T, const ContourParams& params);
double M_j(double theta, double j, double T, const ContourParams& params);

// T-free majorant: L_j(theta) <= L*_j(theta)/T and M_j <= L*_j/(2T log T)
// for all T >= T0, theta in [0, pi].
double L_star_j(double theta, double j, const ContourParams& params);

// The piecewise upper envelope F_{c,r}(theta) for (1/N) log |f_N| on the
// circle, evaluated at height T.  Piece selected by sigma = c + r cos theta;
// at a piece boundary the larger of the two adjacent values is returned.
double F_pointwise(double theta, double T, const ContourParams& params,
                   const ZetaLineHypotheses& hyp);

// Decomposition of the piece containing theta into coefficients of
// log T, log log T, 1, 1/T and 1/(T log T); evaluated at any T >= T0 it
// dominates F_pointwise(theta, T).
struct EnvelopeCoefficients {
    double log_t = 0.0;
    double log_log_t = 0.0;
    double constant = 0.0;
    double inv_t = 0.0;
    double inv_t_log_t = 0.0;

    double eval(double T) const;
};

EnvelopeCoefficients F_coefficients(double theta, const ContourParams& params,
                                    const ZetaLineHypotheses& hyp);

}  // namespace zetacount
