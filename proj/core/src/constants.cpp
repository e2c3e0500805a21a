#include "zetacount/constants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "zetacount/envelope.hpp"
#include "zetacount/errors.hpp"
#include "zetacount/quadrature.hpp"
#include "zetacount/specfn.hpp"

namespace zetacount {

namespace {

constexpr double kPi = std::numbers::pi;

double log_zeta(double sigma) { return std::log(zeta_real(sigma)); }

struct SplitAngles {
    double th_1_eta, th_1, th_half, th_0, th_minus_eta, th_1_minus_c;
};

SplitAngles split_angles(const ContourParams& p) {
    return {theta_split(p, 1.0 + p.eta), theta_split(p, 1.0),
            theta_split(p, 0.5),         theta_split(p, 0.0),
            theta_split(p, -p.eta),      theta_split(p, 1.0 - p.c)};
}

}  // namespace

double kappa1(const ContourParams& p, int J1) {
    if (J1 < 1) throw std::invalid_argument("kappa1 requires J1 >= 1");
    double sum = log_zeta(p.c + p.r);
    for (int j = 1; j < J1; ++j) {
        sum += 2.0 * log_zeta(p.c + p.r * std::cos(kPi * j / (2.0 * J1)));
    }
    return kPi / (4.0 * J1) * sum;
}

double kappa2(const ContourParams& p, int J2) {
    if (J2 < 1) throw std::invalid_argument("kappa2 requires J2 >= 1");
    const double th_1c = theta_split(p, 1.0 - p.c);
    double sum = log_zeta(1.0 - p.c + p.r);
    for (int j = 1; j < J2; ++j) {
        // Nodes interpolate the angle from theta_{1-c} (j = 0, where the
        // argument equals c exactly) to pi (j = J2).
        const double angle = kPi * j / J2 + (1.0 - static_cast<double>(j) / J2) * th_1c;
        sum += 2.0 * log_zeta(1.0 - p.c - p.r * std::cos(angle));
    }
    return (kPi - th_1c) / (2.0 * J2) * sum;
}

double kappa3(const ContourParams& p, const ZetaLineHypotheses& h) {
    const auto th = split_angles(p);
    const double eta = p.eta;

    auto sigma_at = [&p](double theta) { return p.c + p.r * std::cos(theta); };
    auto quad = [](const std::function<double(double)>& f, double lo, double hi) {
        if (hi <= lo) return 0.0;
        const auto res = integrate_adaptive(f, lo, hi, 1e-11);
        if (!res.converged) {
            throw std::runtime_error("kappa3: quadrature did not converge");
        }
        return res.value;
    };
    auto lstar = [&p](double j) {
        return [&p, j](double t) { return L_star_j(t, j, p); };
    };

    // First bracket: every 1/T coefficient of the six segment bounds.
    double first = quad(lstar(-1.0), 0.0, th.th_1_eta);
    first += quad(lstar(h.Q0), th.th_1_eta, th.th_1);
    first += quad([&](double t) {
        const double s = sigma_at(t);
        return ((2.0 - 2.0 * s) * (h.k2 + 1.0) + 2.0 * s - 1.0) * L_star_j(t, h.Q2, p);
    }, th.th_1, th.th_half);
    first += quad(lstar(-1.0), th.th_half, th.th_0);
    first += 0.5 * quad([&](double t) {
        const double s = sigma_at(t);
        return (1.0 - 2.0 * s + 4.0 * h.k2 * s) * L_star_j(t, h.Q5, p);
    }, th.th_half, th.th_0);
    first += quad(lstar(-1.0), th.th_0, th.th_minus_eta);
    first += quad([&](double t) {
        const double s = sigma_at(t);
        return (-s * (1.0 + 2.0 * eta) / (2.0 * eta) + (s + eta) / (2.0 * eta)) *
               L_star_j(t, h.Q4, p);
    }, th.th_0, th.th_minus_eta);
    first += quad(lstar(-1.0), th.th_minus_eta, kPi);
    // theta_{-1/2} = pi under c - r > -1/2, so this segment runs to pi.
    first += quad([&](double t) {
        return 0.5 * (1.0 - 2.0 * sigma_at(t)) * L_star_j(t, 1.0, p);
    }, th.th_minus_eta, kPi);

    // Second bracket: every 1/(T log T) coefficient.
    double second = quad([&](double t) {
        return h.c2 / eta * (1.0 + eta - sigma_at(t)) * L_star_j(t, h.Q0, p);
    }, th.th_1_eta, th.th_1);
    second += quad([&](double t) {
        const double s = sigma_at(t);
        return (h.k3 * (2.0 - 2.0 * s) + h.c2 * (2.0 * s - 1.0)) * L_star_j(t, h.Q2, p);
    }, th.th_1, th.th_half);
    second += quad([&](double t) {
        const double s = sigma_at(t);
        return (h.c2 * (1.0 - 2.0 * s) + 2.0 * h.k3 * s) * L_star_j(t, h.Q5, p);
    }, th.th_half, th.th_0);
    second += quad([&](double t) {
        return (sigma_at(t) + eta) / eta * h.c2 * L_star_j(t, h.Q4, p);
    }, th.th_0, th.th_minus_eta);

    return std::max(0.0, first) / (2.0 * p.T0) +
           std::max(0.0, second) / (2.0 * p.T0 * std::log(p.T0));
}

BoundConstants assemble_constants(const ContourParams& p, const ZetaLineHypotheses& h) {
    const auto report = validate(p);
    if (!report.ok) {
        std::string msg = "invalid contour parameters:";
        for (const auto& v : report.violations) msg += " [" + v + "]";
        throw constraint_error(msg);
    }

    const auto th = split_angles(p);
    const double eta = p.eta;
    const double scale = 2.0 * kPi * std::log(p.r / (p.c - 0.5));
    auto lin = [&p](double a, double b, double lo, double hi) {
        return integral_linear(a, b, lo, hi, p.c, p.r);
    };

    // C~1: the log T coefficients beyond the bare -log T, all linear in sigma.
    const double ct1 = lin(2.0 * h.k2, -2.0 * h.k2, th.th_1, th.th_half) +
                       lin(0.5, 2.0 * h.k2 - 1.0, th.th_half, th.th_0) +
                       lin(0.5, -1.0, th.th_0, th.th_minus_eta) +
                       lin(0.5, -1.0, th.th_minus_eta, kPi);

    // C~2: the log log T coefficients.
    const double ct2 =
        lin(h.c2 * (1.0 + eta) / eta, -h.c2 / eta, th.th_1_eta, th.th_1) +
        lin(2.0 * h.k3 - h.c2, -2.0 * h.k3 + 2.0 * h.c2, th.th_1, th.th_half) +
        lin(h.c2, -2.0 * h.c2 + 2.0 * h.k3, th.th_half, th.th_0) +
        lin(h.c2, h.c2 / eta, th.th_0, th.th_minus_eta);

    // C~3: constant terms.  The E(T, delta) contribution enters through its
    // linear-in-delta bound, valid since the chain pins delta to [1/4, 1/2).
    const double delta = p.delta();
    const double sigma1 = p.sigma1();
    double ct3 = kPi * std::log(p.r / (p.c - 0.5)) *
                 ((640.0 * delta - 112.0) / (1536.0 * (3.0 * p.T0 - 1.0)) +
                  std::pow(2.0, -10.0) + 2.5 + 1.0 / (25.0 * p.T0) +
                  2.0 / kPi * log_zeta(sigma1));
    ct3 += kPi * (log_zeta(p.c) - log_zeta(2.0 * p.c));
    ct3 += std::log(h.c1) / eta * lin(1.0 + eta, -1.0, th.th_1_eta, th.th_1);
    ct3 += log_zeta(1.0 + eta) / eta * lin(-1.0, 1.0, th.th_1_eta, th.th_1);
    ct3 += lin(2.0 * std::log(h.k1) - std::log(h.c1),
               -2.0 * std::log(h.k1) + 2.0 * std::log(h.c1), th.th_1, th.th_half);
    ct3 += std::log(h.c1 / std::sqrt(2.0 * kPi)) * lin(1.0, -2.0, th.th_half, th.th_0);
    ct3 += 2.0 * std::log(h.k1) * lin(0.0, 1.0, th.th_half, th.th_0);
    // The assembled strip-edge constant carries the bare (1 + eta); the
    // envelope functions carry zeta(1 + eta) instead (see envelope.cpp).
    ct3 += lin(std::log(h.c1 / std::sqrt(2.0 * kPi)),
               -std::log((1.0 + eta) / (h.c1 * std::pow(2.0 * kPi, eta))) / eta,
               th.th_0, th.th_minus_eta);
    ct3 += -std::log(2.0 * kPi) * lin(0.5, -1.0, th.th_minus_eta, kPi);
    // Quadrature-sum bounds for the two log-zeta segment integrals.
    const double mean_log_zeta = 0.5 * (log_zeta(1.0 + eta) + log_zeta(p.c));
    ct3 += mean_log_zeta * (th.th_1_eta - kPi / 2.0) +
           kPi / (4.0 * p.J1) * log_zeta(p.c) + kappa1(p, p.J1);
    ct3 += mean_log_zeta * (th.th_1_minus_c - th.th_minus_eta) +
           (kPi - th.th_1_minus_c) / (2.0 * p.J2) * log_zeta(p.c) + kappa2(p, p.J2);
    ct3 += kappa3(p, h);

    BoundConstants bc;
    bc.Ct1 = ct1;
    bc.Ct2 = ct2;
    bc.Ct3 = ct3;
    bc.C1 = ct1 / scale;
    bc.C2 = ct2 / scale;
    bc.C3 = ct3 / scale;
    bc.C3_prime = bc.C3 - 1.0 + std::atan((sigma1 - 1.0) / p.T0) / kPi +
                  std::atan(1.0 / (2.0 * p.T0)) / kPi;
    bc.params = p;
    bc.hyp = h;
    return bc;
}

namespace {

double bound_at(double T, double C1, double C2, double C3) {
    if (!(T >= std::numbers::e)) {
        throw std::domain_error("bound evaluation requires T >= e");
    }
    const double log_T = std::log(T);
    return C1 * log_T + C2 * std::log(log_T) + C3;
}

}  // namespace

double n_bound(double T, const BoundConstants& bc) {
    return bound_at(T, bc.C1, bc.C2, bc.C3);
}

double s_bound(double T, const BoundConstants& bc) {
    return bound_at(T, bc.C1, bc.C2, bc.C3_prime);
}

double CorollaryConstants::n_bound(double T) const {
    return bound_at(T, C1, C2, C3);
}

double CorollaryConstants::s_bound(double T) const {
    return std::min(bound_at(T, C1, C2, s_C3),
                    bound_at(T, s_alt_C1, s_alt_C2, s_alt_C3));
}

double round_up_at(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::ceil(x * scale) / scale;
}

namespace {

void append_row_values(std::ostringstream& out, const BoundConstants& bc,
                       bool round_up, char sep) {
    auto rep = [round_up](double v) { return round_up ? round_up_at(v, 6) : v; };
    out << bc.params.c << sep << bc.params.r << sep << bc.params.eta << sep
        << bc.params.sigma1() << sep << bc.params.delta() << sep << bc.params.T0
        << sep << bc.params.J1 << sep << bc.params.J2 << sep << rep(bc.C1) << sep
        << rep(bc.C2) << sep << rep(bc.C3) << sep << rep(bc.C3_prime);
}

}  // namespace

std::string constants_csv(std::span<const BoundConstants> rows, bool round_up) {
    std::ostringstream out;
    out.precision(10);
    out << "c,r,eta,sigma1,delta,T0,J1,J2,C1,C2,C3,C3prime\n";
    for (const auto& bc : rows) {
        append_row_values(out, bc, round_up, ',');
        out << '\n';
    }
    return out.str();
}

std::string constants_markdown(std::span<const BoundConstants> rows, bool round_up) {
    std::ostringstream out;
    out.precision(10);
    out << "| c | r | eta | sigma1 | delta | T0 | J1 | J2 | C1 | C2 | C3 | C3prime |\n";
    out << "|---|---|-----|--------|-------|----|----|----|----|----|----|---------|\n";
    for (const auto& bc : rows) {
        auto rep = [round_up](double v) { return round_up ? round_up_at(v, 6) : v; };
        out << "| " << bc.params.c << " | " << bc.params.r << " | " << bc.params.eta
            << " | " << bc.params.sigma1() << " | " << bc.params.delta() << " | "
            << bc.params.T0 << " | " << bc.params.J1 << " | " << bc.params.J2
            << " | " << rep(bc.C1) << " | " << rep(bc.C2) << " | " << rep(bc.C3)
            << " | " << rep(bc.C3_prime) << " |\n";
    }
    return out.str();
}

}  // namespace zetacount
