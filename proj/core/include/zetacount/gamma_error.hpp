#pragma once

namespace zetacount {

inline constexpr double kGammaErrorMinHeight = 5.0 / 7.0;

// g(T) = (2/pi) Im log Gamma(1/4 + iT/2) - (T/pi) log(T/(2e)) + 1/4,
// for T >= 5/7; satisfies |g(T)| <= 1/(25 T).
double g_of_T(double T);

// The explicit closed-form bound E(T, d) on the paired gamma-argument
// differences, for T >= 5/7 and 0 <= d < 9/2.  Positive, nondecreasing in d,
// and E(T,d)/pi <= (640 d - 112)/(1536 (3T - 1)) + 2^-10 for d in [1/4, 5/8].
double E_of(double T, double d);

}  // namespace zetacount
