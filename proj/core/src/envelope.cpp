#include "zetacount/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zetacount/specfn.hpp"
#include "zetacount/zeta_bounds.hpp"

namespace zetacount {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double L_j(double theta, double j, double T, const ContourParams& p) {
    const double x = j + p.c + p.r * std::cos(theta);
    const double y = std::abs(p.r * std::sin(theta));
    // log[(x^2 + (y+T)^2)/T^2] = log1p(((x^2+y^2)/T + 2y)/T); the direct
    // quotient cancels catastrophically at T0-scale heights.
    const double u = ((x * x + y * y) / T + 2.0 * y) / T;
    if (!(u > -1.0)) throw std::domain_error("L_j: nonpositive log argument");
    return std::log1p(u);
}

double M_j(double theta, double j, double T, const ContourParams& p) {
    const double log_t_sq = 2.0 * std::log(T);
    if (!(log_t_sq > 0.0)) {
        throw std::domain_error("M_j: inner log argument <= 1");
    }
    const double l = L_j(theta, j, T, p);
    if (!(log_t_sq + l > 0.0)) {
        throw std::domain_error("M_j: inner log argument <= 1");
    }
    // log log(x^2 + (y+T)^2) - log log(T^2) = log1p(L_j / log(T^2)).
    return std::log1p(l / log_t_sq);
}

double L_star_j(double theta, double j, const ContourParams& p) {
    const double x = j + p.c + p.r * std::cos(theta);
    const double y = p.r * std::sin(theta);
    return (x * x + y * y) / p.T0 + 2.0 * p.r * std::sin(theta);
}

namespace {

// One Definition-5.10 piece each; sigma is passed in so boundary handling
// can evaluate a piece at its closure.

double piece_above_eta(double theta, double T, double sigma,
                       const ContourParams& p, const ZetaLineHypotheses&) {
    return 0.5 * L_j(theta, -1.0, T, p) + std::log(T) + std::log(zeta_real(sigma));
}

double piece_one_to_eta(double theta, double T, double sigma,
                        const ContourParams& p, const ZetaLineHypotheses& h) {
    const double eta = p.eta;
    const double w = (1.0 + eta - sigma) / eta;  // weight of the 1-line end
    return w * std::log(h.c1) + (sigma - 1.0) / eta * std::log(zeta_real(1.0 + eta)) +
           0.5 * L_j(theta, h.Q0, T, p) + std::log(T) +
           h.c2 * w * M_j(theta, h.Q0, T, p) + h.c2 * w * std::log(std::log(T));
}

double piece_half_to_one(double theta, double T, double sigma,
                         const ContourParams& p, const ZetaLineHypotheses& h) {
    const double a = (2.0 - 2.0 * sigma) * (h.k2 + 1.0) + 2.0 * sigma - 1.0;
    const double b = h.k3 * (2.0 - 2.0 * sigma) + h.c2 * (2.0 * sigma - 1.0);
    return (2.0 - 2.0 * sigma) * std::log(h.k1) + (2.0 * sigma - 1.0) * std::log(h.c1) +
           a * (0.5 * L_j(theta, h.Q2, T, p) + std::log(T)) +
           b * (M_j(theta, h.Q2, T, p) + std::log(std::log(T)));
}

double piece_zero_to_half(double theta, double T, double sigma,
                          const ContourParams& p, const ZetaLineHypotheses& h) {
    const double a = 0.5 * (1.0 - 2.0 * sigma + 4.0 * h.k2 * sigma);
    const double b = h.c2 * (1.0 - 2.0 * sigma) + 2.0 * h.k3 * sigma;
    return (1.0 - 2.0 * sigma) * std::log(h.c1 / std::sqrt(kTwoPi)) +
           2.0 * sigma * std::log(h.k1) + 0.5 * L_j(theta, -1.0, T, p) + std::log(T) +
           a * (0.5 * L_j(theta, h.Q5, T, p) + std::log(T)) +
           b * (M_j(theta, h.Q5, T, p) + std::log(std::log(T)));
}

double piece_minus_eta_to_zero(double theta, double T, double sigma,
                               const ContourParams& p, const ZetaLineHypotheses& h) {
    const double eta = p.eta;
    // The interpolation endpoint at sigma = -eta carries zeta(1+eta); only
    // with it does the piece dominate (1/N) log |f_N| up to the strip edge.
    const double edge_const =
        std::log(zeta_real(1.0 + eta) / (h.c1 * std::pow(kTwoPi, eta)));
    const double a = -sigma * (1.0 + 2.0 * eta) / (2.0 * eta) + (sigma + eta) / (2.0 * eta);
    return -sigma / eta * edge_const + std::log(h.c1 / std::sqrt(kTwoPi)) +
           0.5 * L_j(theta, -1.0, T, p) + std::log(T) +
           a * (0.5 * L_j(theta, h.Q4, T, p) + std::log(T)) +
           (sigma + eta) / eta * h.c2 * (M_j(theta, h.Q4, T, p) + std::log(std::log(T)));
}

double piece_below_minus_eta(double theta, double T, double sigma,
                             const ContourParams& p, const ZetaLineHypotheses&) {
    const int m = nearest_int(sigma);
    double value = std::log(zeta_real(1.0 - sigma)) + 0.5 * L_j(theta, -1.0, T, p) +
                   (1.0 + 0.5 * (1.0 - 2.0 * sigma)) * std::log(T) -
                   0.5 * (1.0 - 2.0 * sigma) * std::log(kTwoPi) +
                   0.25 * (1.0 - 2.0 * sigma + 2.0 * m) * L_j(theta, 1.0 - m, T, p);
    for (int j = 1; j <= -m; ++j) {
        value += 0.5 * L_j(theta, j - 1.0, T, p);
    }
    return value;
}

using Piece = double (*)(double, double, double, const ContourParams&,
                         const ZetaLineHypotheses&);

// Pieces overlapping sigma, outermost boundaries first.
int pieces_at(double sigma, double eta, Piece out[2]) {
    int n = 0;
    if (sigma >= 1.0 + eta) out[n++] = piece_above_eta;
    if (sigma >= 1.0 && sigma <= 1.0 + eta) out[n++] = piece_one_to_eta;
    if (sigma >= 0.5 && sigma <= 1.0) out[n++] = piece_half_to_one;
    if (sigma >= 0.0 && sigma <= 0.5) out[n++] = piece_zero_to_half;
    if (sigma >= -eta && sigma <= 0.0) out[n++] = piece_minus_eta_to_zero;
    if (sigma <= -eta) out[n++] = piece_below_minus_eta;
    return n;
}

}  // namespace

double F_pointwise(double theta, double T, const ContourParams& p,
                   const ZetaLineHypotheses& h) {
    const double sigma = p.c + p.r * std::cos(theta);
    Piece pieces[2];
    const int n = pieces_at(sigma, p.eta, pieces);
    double value = pieces[0](theta, T, sigma, p, h);
    // On a piece boundary F need only be an upper envelope: take the max.
    for (int i = 1; i < n; ++i) {
        value = std::max(value, pieces[i](theta, T, sigma, p, h));
    }
    return value;
}

double EnvelopeCoefficients::eval(double T) const {
    const double log_T = std::log(T);
    return log_t * log_T + log_log_t * std::log(log_T) + constant + inv_t / T +
           inv_t_log_t / (T * log_T);
}

namespace {

EnvelopeCoefficients coeffs_for_piece(Piece piece, double theta, double sigma,
                                      const ContourParams& p,
                                      const ZetaLineHypotheses& h) {
    EnvelopeCoefficients k;
    if (piece == piece_above_eta) {
        k.log_t = 1.0;
        k.constant = std::log(zeta_real(sigma));
        k.inv_t = 0.5 * L_star_j(theta, -1.0, p);
    } else if (piece == piece_one_to_eta) {
        const double w = (1.0 + p.eta - sigma) / p.eta;
        k.log_t = 1.0;
        k.log_log_t = h.c2 * w;
        k.constant = w * std::log(h.c1) +
                     (sigma - 1.0) / p.eta * std::log(zeta_real(1.0 + p.eta));
        k.inv_t = 0.5 * L_star_j(theta, h.Q0, p);
        k.inv_t_log_t = 0.5 * h.c2 * w * L_star_j(theta, h.Q0, p);
    } else if (piece == piece_half_to_one) {
        const double a = (2.0 - 2.0 * sigma) * (h.k2 + 1.0) + 2.0 * sigma - 1.0;
        const double b = h.k3 * (2.0 - 2.0 * sigma) + h.c2 * (2.0 * sigma - 1.0);
        k.log_t = a;
        k.log_log_t = b;
        k.constant = (2.0 - 2.0 * sigma) * std::log(h.k1) +
                     (2.0 * sigma - 1.0) * std::log(h.c1);
        k.inv_t = 0.5 * a * L_star_j(theta, h.Q2, p);
        k.inv_t_log_t = 0.5 * b * L_star_j(theta, h.Q2, p);
    } else if (piece == piece_zero_to_half) {
        const double a = 0.5 * (1.0 - 2.0 * sigma + 4.0 * h.k2 * sigma);
        const double b = h.c2 * (1.0 - 2.0 * sigma) + 2.0 * h.k3 * sigma;
        k.log_t = 1.0 + a;
        k.log_log_t = b;
        k.constant = (1.0 - 2.0 * sigma) * std::log(h.c1 / std::sqrt(kTwoPi)) +
                     2.0 * sigma * std::log(h.k1);
        k.inv_t = 0.5 * L_star_j(theta, -1.0, p) + 0.5 * a * L_star_j(theta, h.Q5, p);
        k.inv_t_log_t = 0.5 * b * L_star_j(theta, h.Q5, p);
    } else if (piece == piece_minus_eta_to_zero) {
        const double eta = p.eta;
        const double a =
            -sigma * (1.0 + 2.0 * eta) / (2.0 * eta) + (sigma + eta) / (2.0 * eta);
        const double b = (sigma + eta) / eta * h.c2;
        k.log_t = 1.0 + a;
        k.log_log_t = b;
        k.constant = -sigma / eta *
                         std::log(zeta_real(1.0 + eta) / (h.c1 * std::pow(kTwoPi, eta))) +
                     std::log(h.c1 / std::sqrt(kTwoPi));
        k.inv_t = 0.5 * L_star_j(theta, -1.0, p) + 0.5 * a * L_star_j(theta, h.Q4, p);
        k.inv_t_log_t = 0.5 * b * L_star_j(theta, h.Q4, p);
    } else {
        const int m = nearest_int(sigma);
        k.log_t = 1.0 + 0.5 * (1.0 - 2.0 * sigma);
        k.constant = std::log(zeta_real(1.0 - sigma)) -
                     0.5 * (1.0 - 2.0 * sigma) * std::log(kTwoPi);
        k.inv_t = 0.5 * L_star_j(theta, -1.0, p) +
                  0.25 * (1.0 - 2.0 * sigma + 2.0 * m) * L_star_j(theta, 1.0 - m, p);
        for (int j = 1; j <= -m; ++j) {
            k.inv_t += 0.5 * L_star_j(theta, j - 1.0, p);
        }
    }
    return k;
}

}  // namespace

EnvelopeCoefficients F_coefficients(double theta, const ContourParams& p,
                                    const ZetaLineHypotheses& h) {
    const double sigma = p.c + p.r * std::cos(theta);
    Piece pieces[2];
    const int n = pieces_at(sigma, p.eta, pieces);
    EnvelopeCoefficients k = coeffs_for_piece(pieces[0], theta, sigma, p, h);
    // Componentwise max dominates both adjacent pieces (all five basis
    // functions are nonnegative for T >= e).
    for (int i = 1; i < n; ++i) {
        const auto other = coeffs_for_piece(pieces[i], theta, sigma, p, h);
        k.log_t = std::max(k.log_t, other.log_t);
        k.log_log_t = std::max(k.log_log_t, other.log_log_t);
        k.constant = std::max(k.constant, other.constant);
        k.inv_t = std::max(k.inv_t, other.inv_t);
        k.inv_t_log_t = std::max(k.inv_t_log_t, other.inv_t_log_t);
    }
    return k;
}

}  // namespace zetacount
