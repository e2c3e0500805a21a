#pragma once

#include <complex>

namespace zetacount {

inline constexpr double kZetaWindowHeight = 10'000.0;  // supported |Im s|

// zeta(sigma) for sigma > 1 by Euler-Maclaurin summation with a bounded
// tail; absolute error <= 1e-13 * max(1, zeta(sigma)).
double zeta_real(double sigma);

// zeta(s) by Euler-Maclaurin with truncation chosen from |Im s|; estimated
// error <= 1e-10 * (1 + |zeta(s)|) inside the window |Im s| <= 10000.
std::complex<double> zeta_complex(std::complex<double> s);

// log Gamma(z) on the principal (continuous) branch, Re z > 0 required.
std::complex<double> log_gamma(std::complex<double> z);

// Im log Gamma(z), principal continuous branch, Re z > 0 required.
double log_gamma_im(std::complex<double> z);

// log |Gamma(z)| anywhere off the poles (no branch issues in the modulus).
double log_abs_gamma(std::complex<double> z);

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, t >= 1.
double riemann_siegel_theta(double t);

// Z(t) = e^{i theta(t)} zeta(1/2 + it); real-valued on the critical line.
double hardy_z(double t);

namespace detail {

struct EulerMaclaurinResult {
    std::complex<double> value;
    double error_estimate;  // truncation plus accumulated-rounding estimate
    double truncation;      // truncation remainder alone
};

// Raw Euler-Maclaurin evaluation with explicit truncation: N summation
// terms and K Bernoulli corrections.  Valid for Re s > -(2K-1), s != 1.
EulerMaclaurinResult zeta_euler_maclaurin(std::complex<double> s, int n_terms,
                                          int bernoulli_terms);

}  // namespace detail

}  // namespace zetacount
