#include "zetacount/zeta_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "zetacount/errors.hpp"
#include "zetacount/specfn.hpp"

namespace zetacount {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double region1_bound(double sigma) { return zeta_real(sigma); }

// |(s-1) zeta(s)| bounds on the interpolation strips, divided by |s-1|.
double region2_bound(cplx s, const ZetaLineHypotheses& h, double eta) {
    const double sigma = s.real();
    const double a = std::abs(h.Q0 + s);
    const double left = h.c1 * a * std::pow(std::log(a), h.c2);
    const double right = zeta_real(1.0 + eta) * a;
    return std::pow(left, (1.0 + eta - sigma) / eta) *
           std::pow(right, (sigma - 1.0) / eta) / std::abs(s - 1.0);
}

double region3_bound(cplx s, const ZetaLineHypotheses& h) {
    const double sigma = s.real();
    const double a = std::abs(h.Q2 + s);
    const double log_a = std::log(a);
    const double half_line = h.k1 * std::pow(a, h.k2 + 1.0) * std::pow(log_a, h.k3);
    const double one_line = h.c1 * a * std::pow(log_a, h.c2);
    return std::pow(half_line, 2.0 - 2.0 * sigma) *
           std::pow(one_line, 2.0 * sigma - 1.0) / std::abs(s - 1.0);
}

double region4_bound(cplx s, const ZetaLineHypotheses& h) {
    const double sigma = s.real();
    const double a = std::abs(h.Q5 + s);
    const double log_a = std::log(a);
    const double zero_line = h.c1 / std::sqrt(kTwoPi) * std::sqrt(a) * std::pow(log_a, h.c2);
    const double half_line = h.k1 * std::pow(a, h.k2) * std::pow(log_a, h.k3);
    return std::pow(zero_line, 1.0 - 2.0 * sigma) * std::pow(half_line, 2.0 * sigma);
}

double region5_bound(cplx s, const ZetaLineHypotheses& h, double eta) {
    const double sigma = s.real();
    const double a = std::abs(h.Q4 + s);
    const double strip_edge =
        zeta_real(1.0 + eta) * std::pow(kTwoPi, -(0.5 + eta)) * std::pow(a, 0.5 + eta);
    const double zero_line = h.c1 / std::sqrt(kTwoPi) * std::sqrt(a) *
                             std::pow(std::log(a), h.c2);
    return std::pow(strip_edge, -sigma / eta) * std::pow(zero_line, (sigma + eta) / eta);
}

double region6_bound(cplx s) {
    const double sigma = s.real();
    const int m = nearest_int(sigma);
    // Evaluated in log space; the product over j can overflow for very
    // negative sigma otherwise.
    double log_bound = std::log(zeta_real(1.0 - sigma)) -
                       (0.5 - sigma) * std::log(kTwoPi) +
                       (0.5 + m - sigma) * std::log(std::abs(1.0 + s - static_cast<double>(m)));
    for (int j = 1; j <= -m; ++j) {
        log_bound += std::log(std::abs(s + static_cast<double>(j - 1)));
    }
    return std::exp(log_bound);
}

}  // namespace

int nearest_int(double x) {
    const double f = std::floor(x);
    const double frac = x - f;
    if (frac < 0.5) return static_cast<int>(f);
    if (frac > 0.5) return static_cast<int>(f) + 1;
    // Half-integer tie: take the neighbour closer to 0.
    return f >= 0.0 ? static_cast<int>(f) : static_cast<int>(f) + 1;
}

double zeta_upper_bound(cplx s, const ZetaLineHypotheses& hyp, double eta) {
    const double sigma = s.real();
    double bound = std::numeric_limits<double>::infinity();
    if (sigma >= 1.0 + eta) bound = std::min(bound, region1_bound(sigma));
    if (sigma >= 1.0 && sigma <= 1.0 + eta) bound = std::min(bound, region2_bound(s, hyp, eta));
    if (sigma >= 0.5 && sigma <= 1.0) bound = std::min(bound, region3_bound(s, hyp));
    if (sigma >= 0.0 && sigma <= 0.5) bound = std::min(bound, region4_bound(s, hyp));
    if (sigma >= -eta && sigma <= 0.0) bound = std::min(bound, region5_bound(s, hyp, eta));
    if (sigma <= -eta) bound = std::min(bound, region6_bound(s));
    return bound;
}

bool gamma_ratio_bound_holds(cplx s) {
    const double sigma = s.real();
    if (sigma < -0.5 || sigma > 0.5) {
        throw std::domain_error("gamma_ratio_bound_holds requires -1/2 <= Re s <= 1/2");
    }
    const double rhs_log = (0.5 - sigma) * std::log(std::abs(1.0 + s) / 2.0);
    // Gamma(s/2) pole (s = 0, -2, ...): the ratio vanishes there.
    const cplx half_s = 0.5 * s;
    if (std::abs(half_s) < 1e-300) return true;
    const double lhs_log = log_abs_gamma(0.5 - half_s) - log_abs_gamma(half_s);
    return lhs_log <= rhs_log;
}

std::complex<double> f_N(cplx s, double T, int N) {
    if (N < 1 || N > 8) {
        throw std::invalid_argument("f_N requires 1 <= N <= 8");
    }
    const cplx up = (s + cplx{0.0, T} - 1.0) * zeta_complex(s + cplx{0.0, T});
    const cplx down = (s - cplx{0.0, T} - 1.0) * zeta_complex(s - cplx{0.0, T});
    if (std::abs(up) > 1e30 || std::abs(down) > 1e30) {
        throw overflow_guard_error("f_N: power base exceeds the overflow guard");
    }
    cplx up_pow{1.0, 0.0}, down_pow{1.0, 0.0};
    for (int i = 0; i < N; ++i) {
        up_pow *= up;
        down_pow *= down;
    }
    return 0.5 * (up_pow + down_pow);
}

std::vector<double> make_q_grid(double t_max, double t_split, double fine_step,
                                double coarse_step) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(t_split / fine_step + (t_max - t_split) / coarse_step) + 2);
    for (double t = 0.0; t < t_split; t += fine_step) grid.push_back(t);
    for (double t = t_split; t <= t_max; t += coarse_step) grid.push_back(t);
    return grid;
}

namespace {

struct RatioTracker {
    QInequalityCheck check;
    void update(double lhs, double rhs, double t) {
        const double ratio = lhs / rhs;
        if (ratio > check.max_ratio) {
            check.max_ratio = ratio;
            check.argmax_t = t;
        }
    }
};

}  // namespace

QVerification verify_q(const ZetaLineHypotheses& h, double eta,
                       std::span<const double> grid) {
    RatioTracker one_line{{"(s-1)zeta on sigma=1 vs Q0"}};
    RatioTracker half_line_s{{"(s-1)zeta on sigma=1/2 vs Q1"}};
    RatioTracker half_line{{"zeta on sigma=1/2 vs Q3"}};
    RatioTracker zero_line{{"zeta on sigma=0 vs Q4"}};
    RatioTracker strip_edge{{"zeta on sigma=-eta vs Q4"}};

    const double zeta_one_plus_eta = zeta_real(1.0 + eta);
    for (double t : grid) {
        // sigma = 1: |(it) zeta(1+it)| <= c1 |Q0+1+it| log(|Q0+1+it|)^c2.
        // At t = 0 the left side is the limit |(s-1)zeta(s)| -> 1.
        {
            const double lhs = t == 0.0
                ? 1.0
                : std::abs(cplx{0.0, t} * zeta_complex(cplx{1.0, t}));
            const double a = std::abs(h.Q0 + cplx{1.0, t});
            one_line.update(lhs, h.c1 * a * std::pow(std::log(a), h.c2), t);
        }
        const cplx half{0.5, t};
        const double zeta_half_mod = std::abs(zeta_complex(half));
        // sigma = 1/2, multiplied form (Q1) and plain form (Q3).
        {
            const double a = std::abs(h.Q1 + half);
            half_line_s.update(std::abs(half - 1.0) * zeta_half_mod,
                               h.k1 * std::pow(a, h.k2 + 1.0) * std::pow(std::log(a), h.k3), t);
        }
        {
            const double a = std::abs(h.Q3 + half);
            half_line.update(zeta_half_mod,
                             h.k1 * std::pow(a, h.k2) * std::pow(std::log(a), h.k3), t);
        }
        // sigma = 0 (Q4).
        {
            const double lhs = std::abs(zeta_complex(cplx{0.0, t}));
            const double a = std::abs(h.Q4 + cplx{0.0, t});
            zero_line.update(lhs, h.c1 / std::sqrt(kTwoPi) * std::sqrt(a) *
                                      std::pow(std::log(a), h.c2), t);
        }
        // sigma = -eta (case (5) display).
        {
            const double lhs = std::abs(zeta_complex(cplx{-eta, t}));
            const double a = std::abs(cplx{h.Q4 - eta, t});
            strip_edge.update(lhs, std::pow(a / kTwoPi, 0.5 + eta) * zeta_one_plus_eta, t);
        }
    }

    QVerification out;
    out.checks = {one_line.check, half_line_s.check, half_line.check,
                  zero_line.check, strip_edge.check};
    for (const auto& c : out.checks) out.pass = out.pass && c.pass();
    return out;
}

}  // namespace zetacount
