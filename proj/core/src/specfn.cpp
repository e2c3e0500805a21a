#include "zetacount/specfn.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zetacount/errors.hpp"

namespace zetacount {

namespace {

using cplx = std::complex<double>;

// B_2, B_4, ..., B_26 (B_26 only drives the remainder estimate).
constexpr double kBernoulli[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};
constexpr int kMaxBernoulliTerms = 12;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Kahan-compensated accumulator for the long Dirichlet partial sums.
struct CompensatedSum {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    void add(cplx term) {
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

namespace detail {

EulerMaclaurinResult zeta_euler_maclaurin(cplx s, int n_terms, int bernoulli_terms) {
    assert(n_terms >= 2);
    assert(bernoulli_terms >= 1 && bernoulli_terms <= kMaxBernoulliTerms);
    const double big_n = static_cast<double>(n_terms);

    CompensatedSum head;
    for (int n = 1; n < n_terms; ++n) {
        head.add(std::exp(-s * std::log(static_cast<double>(n))));
    }

    const cplx n_to_minus_s = std::exp(-s * std::log(big_n));
    cplx value = head.sum + 0.5 * n_to_minus_s + n_to_minus_s * big_n / (s - 1.0);

    // Correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1};
    // the remainder is bounded by the first omitted term scaled by
    // |s + 2K + 1| / (sigma + 2K + 1).
    cplx rising = s;            // s(s+1)...(s+2k-2), grown incrementally
    double n_power = 1.0 / big_n;  // N^{-2k+1}
    for (int k = 1; k <= bernoulli_terms; ++k) {
        const double coeff = kBernoulli[k - 1] / factorial(2 * k);
        value += coeff * rising * n_to_minus_s * n_power;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        n_power /= big_n * big_n;
    }

    const int k_next = bernoulli_terms + 1;
    const double sigma = s.real();
    const double tail_factor = std::abs(s + static_cast<double>(2 * bernoulli_terms + 1)) /
                               (sigma + 2.0 * bernoulli_terms + 1.0);
    const double truncation =
        std::abs(kBernoulli[k_next - 1] / factorial(2 * k_next) * rising * n_to_minus_s) *
        n_power * tail_factor;
    // Rounding estimate: the head terms have modulus n^{-sigma}, so their
    // magnitude sum is below N * max(1, N^{-sigma}); for sigma < 0 the sum
    // cancels down from that scale and the rounding floor matters.  Each
    // term exp(-s log n) also carries a phase rounded at |t| log n ulp.
    const double head_magnitude = big_n * std::max(1.0, std::pow(big_n, -sigma));
    const double closing_magnitude =
        std::abs(n_to_minus_s) * (0.5 + big_n / std::abs(s - 1.0));
    const double per_term_ulp = 4.0 + 0.5 * std::abs(s.imag()) * std::log(big_n);
    const double rounding = per_term_ulp * 2.220446049250313e-16 *
                            (head_magnitude + closing_magnitude + std::abs(value));
    return {value, truncation + rounding, truncation};
}

}  // namespace detail

double zeta_real(double sigma) {
    if (!(sigma > 1.0)) {
        throw std::domain_error("zeta_real requires sigma > 1");
    }
    const auto em = detail::zeta_euler_maclaurin(cplx{sigma, 0.0}, 20, 12);
    return em.value.real();
}

std::complex<double> zeta_complex(cplx s) {
    if (s == cplx{1.0, 0.0}) {
        throw std::domain_error("zeta_complex: pole at s = 1");
    }
    const double t = std::abs(s.imag());
    if (t > kZetaWindowHeight) {
        throw window_error("zeta_complex: |Im s| beyond supported window");
    }
    int n_terms = static_cast<int>(std::ceil(std::max(20.0, 2.0 * t)));
    auto em = detail::zeta_euler_maclaurin(s, n_terms, 12);
    double target = 1e-10 * (1.0 + std::abs(em.value));
    // The default truncation already has large margin in the window; refine
    // on the rare occasions the estimate says otherwise.  Only the
    // truncation part shrinks with N, so only it drives retries.
    for (int tries = 0; tries < 3 && em.truncation > target; ++tries) {
        n_terms *= 2;
        em = detail::zeta_euler_maclaurin(s, n_terms, 12);
        target = 1e-10 * (1.0 + std::abs(em.value));
    }
    return em.value;
}

namespace {

// Stirling series for log Gamma(w), |w| large, |arg w| < pi.
cplx log_gamma_stirling(cplx w) {
    const cplx log_w = std::log(w);
    cplx result = (w - 0.5) * log_w - w + 0.5 * std::log(2.0 * std::numbers::pi);
    const cplx w2 = w * w;
    cplx w_power = w;  // w^{2k-1}
    for (int k = 1; k <= 8; ++k) {
        result += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) / w_power;
        w_power *= w2;
    }
    return result;
}

constexpr double kStirlingRadius = 16.0;

}  // namespace

std::complex<double> log_gamma(cplx z) {
    if (!(z.real() > 0.0)) {
        throw std::domain_error("log_gamma requires Re z > 0");
    }
    // Shift right until Stirling applies; each factor has Re > 0 so the
    // principal logs keep the branch continuous.
    cplx shift_sum{0.0, 0.0};
    int shifts = 0;
    while (std::abs(z + static_cast<double>(shifts)) < kStirlingRadius) {
        shift_sum += std::log(z + static_cast<double>(shifts));
        ++shifts;
    }
    return log_gamma_stirling(z + static_cast<double>(shifts)) - shift_sum;
}

double log_gamma_im(cplx z) { return log_gamma(z).imag(); }

double log_abs_gamma(cplx z) {
    // |Gamma| has no branch cuts, so the recursion works for any Re z.
    double shift_log_abs = 0.0;
    int shifts = 0;
    while (std::abs(z + static_cast<double>(shifts)) < kStirlingRadius ||
           (z.real() + shifts) < 1.0) {
        const double mod = std::abs(z + static_cast<double>(shifts));
        if (mod == 0.0) {
            throw std::domain_error("log_abs_gamma: pole of Gamma");
        }
        shift_log_abs += std::log(mod);
        ++shifts;
    }
    return log_gamma_stirling(z + static_cast<double>(shifts)).real() - shift_log_abs;
}

double riemann_siegel_theta(double t) {
    if (!(t >= 1.0)) {
        throw std::domain_error("riemann_siegel_theta requires t >= 1");
    }
    return log_gamma_im(cplx{0.25, t / 2.0}) - (t / 2.0) * std::log(std::numbers::pi);
}

double hardy_z(double t) {
    const double theta = riemann_siegel_theta(t);
    const cplx z = zeta_complex(cplx{0.5, t});
    // e^{i theta} zeta(1/2 + it) is real; the imaginary part is rounding noise.
    return (std::exp(cplx{0.0, theta}) * z).real();
}

}  // namespace zetacount
