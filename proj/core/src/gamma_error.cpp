#include "zetacount/gamma_error.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "zetacount/specfn.hpp"

namespace zetacount {

double g_of_T(double T) {
    if (!(T >= kGammaErrorMinHeight)) {
        throw std::domain_error("g_of_T requires T >= 5/7");
    }
    const double pi = std::numbers::pi;
    if (T < 32.0) {
        return 2.0 / pi * log_gamma_im(std::complex<double>{0.25, T / 2.0}) -
               T / pi * std::log(T / (2.0 * std::numbers::e)) + 0.25;
    }
    // For large T the definition subtracts two O(T log T) quantities to
    // leave an O(1/T) remainder, which the direct form cannot resolve in
    // doubles.  Cancelling the Stirling main terms against the log factor
    // analytically leaves
    //   g(T) = atan(1/(2T))/(2pi) + (T/(2pi)) log1p(1/(4T^2)) + (2/pi) S,
    // with S the imaginary part of the Stirling tail at z = 1/4 + iT/2
    // (|z| >= 16 here, so no argument shift is needed).
    static const double b[8] = {1.0 / 6.0,       -1.0 / 30.0,     1.0 / 42.0,
                                -1.0 / 30.0,     5.0 / 66.0,      -691.0 / 2730.0,
                                7.0 / 6.0,       -3617.0 / 510.0};
    const std::complex<double> z{0.25, T / 2.0};
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv_sq = inv * inv;
    std::complex<double> power = inv;  // z^{1-2k}
    double tail_im = 0.0;
    for (int k = 1; k <= 8; ++k) {
        tail_im += b[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power.imag();
        power *= inv_sq;
    }
    return std::atan(1.0 / (2.0 * T)) / (2.0 * pi) +
           T / (2.0 * pi) * std::log1p(1.0 / (4.0 * T * T)) + 2.0 / pi * tail_im;
}

double E_of(double T, double d) {
    if (!(T >= kGammaErrorMinHeight)) {
        throw std::domain_error("E_of requires T >= 5/7");
    }
    if (!(d >= 0.0 && d < 4.5)) {
        throw std::domain_error("E_of requires 0 <= d < 9/2");
    }
    const double pi = std::numbers::pi;
    const double T2 = 4.0 * T * T;
    const double up = 2.0 * d + 17.0;   // shifted offsets
    const double dn = -2.0 * d + 17.0;

    double value = (2.0 * T / 3.0) / (up * up + T2)
                 + (2.0 * T / 3.0) / (dn * dn + T2)
                 - (4.0 * T / 3.0) / (17.0 * 17.0 + T2);

    // log(1 + x^2/(4T^2)) via log1p; at T0-scale heights the plain form
    // cancels catastrophically.
    value += (T / 2.0) * std::log1p(17.0 * 17.0 / T2)
           - (T / 4.0) * std::log1p(up * up / T2)
           - (T / 4.0) * std::log1p(dn * dn / T2);

    const double w = (8.0 + 6.0 * pi) / 45.0;
    value += w / std::pow(up * up + T2, 1.5)
           + w / std::pow(dn * dn + T2, 1.5)
           + 2.0 * w / std::pow(17.0 * 17.0 + T2, 1.5);

    // The k = 0..3 arctan sum, kept in the printed difference form: each
    // term is tiny and sign-alternating, combining them loses accuracy.
    for (int k = 0; k <= 3; ++k) {
        const double base = 1.0 + 4.0 * k;
        value += 2.0 * std::atan(base / (2.0 * T))
               - std::atan((2.0 * d + base) / (2.0 * T))
               - std::atan((-2.0 * d + base) / (2.0 * T));
    }

    value += (2.0 * d + 15.0) / 4.0 * std::atan(up / (2.0 * T))
           + (-2.0 * d + 15.0) / 4.0 * std::atan(dn / (2.0 * T))
           - 7.5 * std::atan(17.0 / (2.0 * T));
    return value;
}

}  // namespace zetacount
