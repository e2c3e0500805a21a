#pragma once

#include <span>
#include <string>

#include "zetacount/params.hpp"

namespace zetacount {

// Final bound constants for a parameter choice: for T >= T0,
//   |N(T) - (T/2pi) log(T/2pi e) + 1/8| <= C1 log T + C2 log log T + C3,
//   |S(T)|                              <= C1 log T + C2 log log T + C3'.
struct BoundConstants {
    double C1 = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
    double C3_prime = 0.0;
    double Ct1 = 0.0;  // pre-scaling values C~j = Cj * 2 pi log(r/(c-1/2))
    double Ct2 = 0.0;
    double Ct3 = 0.0;
    ContourParams params;
    ZetaLineHypotheses hyp;
};

// Quadrature-sum bounds on the two log-zeta segment integrals.
double kappa1(const ContourParams& params, int J1);
double kappa2(const ContourParams& params, int J2);

// The 1/T0-scale remainder collecting every L*-integral, both brackets
// clamped below at zero.
double kappa3(const ContourParams& params, const ZetaLineHypotheses& hyp);

// Assembles (C1, C2, C3, C3').  Throws constraint_error when the parameters
// fail validation.  C~1 and C~2 use exact closed-form integrals only and
// depend on nothing but (c, r, eta, k2, c2, k3).
BoundConstants assemble_constants(const ContourParams& params,
                                  const ZetaLineHypotheses& hyp);

// Right side of the N(T) bound at height T (T >= e required).
double n_bound(double T, const BoundConstants& bc);
// Right side of the S(T) bound at height T (T >= e required).
double s_bound(double T, const BoundConstants& bc);

// Round up (toward +infinity) at the given decimal place; bound constants
// are reported rounded up since they are upper bounds.
double round_up_at(double x, int decimals);

// Reports: CSV with columns c,r,eta,sigma1,delta,T0,J1,J2,C1,C2,C3,C3prime,
// and a Markdown table with the same data.
std::string constants_csv(std::span<const BoundConstants> rows, bool round_up);
std::string constants_markdown(std::span<const BoundConstants> rows, bool round_up);

// Headline constants, valid from T >= e on: |N(T) - main| <= 0.1038 log T +
// 0.2573 log log T + 9.3675, and the two S(T) branches
// min{same with 8.3675, 0.1095 log T + 0.2042 log log T + 3.0305}.
struct CorollaryConstants {
    double C1 = 0.1038;
    double C2 = 0.2573;
    double C3 = 9.3675;
    double s_C3 = 8.3675;
    double s_alt_C1 = 0.1095;
    double s_alt_C2 = 0.2042;
    double s_alt_C3 = 3.0305;

    double n_bound(double T) const;
    double s_bound(double T) const;  // min of the two branches
};

}  // namespace zetacount
