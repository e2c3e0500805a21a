#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "zetacount/envelope.hpp"
#include "zetacount/errors.hpp"
#include "zetacount/specfn.hpp"
#include "zetacount/zeta_bounds.hpp"

using namespace zetacount;
using cplx = std::complex<double>;

namespace {

ContourParams row2() { return {1.025253504, 1.182375395, 0.009944751381}; }

}  // namespace

TEST_SUITE("zeta_bounds") {

TEST_CASE("nearest integer ties toward zero") {
    CHECK(nearest_int(0.4) == 0);
    CHECK(nearest_int(0.6) == 1);
    CHECK(nearest_int(-0.4) == 0);
    CHECK(nearest_int(-0.6) == -1);
    CHECK(nearest_int(0.5) == 0);
    CHECK(nearest_int(-0.5) == 0);
    CHECK(nearest_int(1.5) == 1);
    CHECK(nearest_int(-1.5) == -1);
    CHECK(nearest_int(2.5) == 2);
    CHECK(nearest_int(-3.7) == -4);
}

TEST_CASE("region 1 bound is the sigma-only trivial bound") {
    ZetaLineHypotheses h;
    CHECK(zeta_upper_bound(cplx{2.0, 1000.0}, h, 0.01) ==
          doctest::Approx(zeta_real(2.0)).epsilon(1e-13));
}

TEST_CASE("region 3 bound at 1/2 + 100i matches a hand transcription") {
    ZetaLineHypotheses h;
    const cplx s{0.5, 100.0};
    // sigma = 1/2 collapses the interpolation onto the half-line factor:
    // k1 |Q2+s|^{k2+1} (log|Q2+s|)^{k3} / |s-1|.
    const double a = std::hypot(h.Q2 + 0.5, 100.0);
    const double expected = h.k1 * std::pow(a, h.k2 + 1.0) * std::log(a) /
                            std::abs(s - 1.0);
    // At the region boundary the minimum of the two adjacent bounds is
    // returned, so the region-3 value is an upper bound for the result.
    const double got = zeta_upper_bound(s, h, 0.01);
    CHECK(got <= expected * (1.0 + 1e-13));
    const cplx s_inside{0.51, 100.0};
    const double a2 = std::abs(h.Q2 + s_inside);
    const double expected_inside =
        std::pow(h.k1 * std::pow(a2, h.k2 + 1.0) * std::pow(std::log(a2), h.k3),
                 2.0 - 2.0 * 0.51) *
        std::pow(h.c1 * a2 * std::pow(std::log(a2), h.c2), 2.0 * 0.51 - 1.0) /
        std::abs(s_inside - 1.0);
    CHECK(zeta_upper_bound(s_inside, h, 0.01) ==
          doctest::Approx(expected_inside).epsilon(1e-13));
}

TEST_CASE("bounds dominate |zeta| in every region") {
    ZetaLineHypotheses h;
    const double eta = row2().eta;
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo[6] = {1.0 + eta, 1.0, 0.5, 0.0, -eta, -5.0};
    const double hi[6] = {5.0, 1.0 + eta, 1.0, 0.5, 0.0, -eta};
    for (int region = 0; region < 6; ++region) {
        for (int i = 0; i < 200; ++i) {
            const double sigma = lo[region] + unit(rng) * (hi[region] - lo[region]);
            const double t = 3.0 + unit(rng) * 497.0;
            const cplx s{sigma, t};
            const double bound = zeta_upper_bound(s, h, eta);
            CHECK(std::isfinite(bound));
            CHECK(bound >= 0.0);
            CHECK(std::abs(zeta_complex(s)) <= bound);
        }
    }
}

TEST_CASE("adjacent region bounds are finite and consistent at the seams") {
    ZetaLineHypotheses h;
    const double eta = row2().eta;
    for (double t : {5.0, 50.0, 333.0}) {
        for (double sigma : {1.0 + eta, 1.0, 0.5, 0.0, -eta}) {
            const cplx s{sigma, t};
            const double at = zeta_upper_bound(s, h, eta);
            const double left = zeta_upper_bound(cplx{sigma - 1e-9, t}, h, eta);
            const double right = zeta_upper_bound(cplx{sigma + 1e-9, t}, h, eta);
            CHECK(std::isfinite(at));
            CHECK(at <= std::max(left, right) * (1.0 + 1e-6));
            CHECK(std::abs(zeta_complex(s)) <= at);
        }
    }
}

TEST_CASE("gamma ratio inequality, examples and samples") {
    CHECK(gamma_ratio_bound_holds(cplx{0.0, 2.0}));
    CHECK(gamma_ratio_bound_holds(cplx{0.5, 0.0001}));
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> sig(-0.5, 0.5);
    std::uniform_real_distribution<double> height(0.01, 100.0);
    for (int i = 0; i < 500; ++i) {
        CHECK(gamma_ratio_bound_holds(cplx{sig(rng), height(rng)}));
    }
    CHECK_THROWS_AS(gamma_ratio_bound_holds(cplx{0.7, 1.0}), std::domain_error);
}

TEST_CASE("near sigma = 1/2 the two sides of the gamma ratio are close") {
    const cplx s{0.5, 0.0001};
    const double lhs = std::exp(log_abs_gamma(0.5 - 0.5 * s) - log_abs_gamma(0.5 * s));
    const double rhs = std::pow(std::abs(1.0 + s) / 2.0, 0.5 - s.real());
    CHECK(std::abs(lhs - rhs) < 1e-3);
}

TEST_CASE("f_N examples") {
    // N = 1, T = 0, s = 2: collapses to (2-1) zeta(2).
    const cplx v = f_N(cplx{2.0, 0.0}, 0.0, 1);
    CHECK(v.real() == doctest::Approx(1.6449340668482264).epsilon(1e-13));
    CHECK(std::abs(v.imag()) < 1e-13);

    // Real s: the two halves are conjugates, so f_1 is real.
    const cplx w = f_N(cplx{1.7, 0.0}, 37.5, 1);
    CHECK(std::abs(w.imag()) < 1e-10 * std::abs(w.real()));
    const cplx direct = (cplx{1.7, 37.5} - 1.0) * zeta_complex(cplx{1.7, 37.5});
    CHECK(w.real() == doctest::Approx(direct.real()).epsilon(1e-12));

    CHECK_THROWS_AS(f_N(cplx{2.0, 0.0}, 10.0, 9), std::invalid_argument);
    CHECK_THROWS_AS(f_N(cplx{2.0, 0.0}, 10.0, 0), std::invalid_argument);
}

TEST_CASE("f_N overflow guard trips far left of the strip") {
    // |(s - iT - 1) zeta(s - iT)| at sigma = -20, T = 9000 is ~1e65.
    CHECK_THROWS_AS(f_N(cplx{-20.0, 0.0}, 9000.0, 1), overflow_guard_error);
}

TEST_CASE("f_N against the envelope for row 2 at T = 100") {
    const auto p = row2();
    ZetaLineHypotheses h;
    for (int i = 1; i < 24; ++i) {
        const double theta = std::numbers::pi * i / 24.0;
        const cplx s = p.c + p.r * std::exp(cplx{0.0, theta});
        const double lhs = 0.5 * std::log(std::abs(f_N(s, 100.0, 2)));
        CHECK(lhs <= F_pointwise(theta, 100.0, p, h));
    }
}

TEST_CASE("envelope domination across T and N, region 5 sliver included") {
    const auto p = row2();
    ZetaLineHypotheses h;
    const double th0 = theta_split(p, 0.0);
    const double thme = theta_split(p, -p.eta);
    for (double T : {50.0, 100.0, 500.0}) {
        for (int N : {1, 2, 4}) {
            for (int i = 0; i <= 20; ++i) {
                const double theta = th0 + (thme - th0) * i / 20.0;
                const cplx s = p.c + p.r * std::exp(cplx{0.0, theta});
                const double lhs = std::log(std::abs(f_N(s, T, N))) / N;
                CHECK(lhs <= F_pointwise(theta, T, p, h));
            }
        }
    }
}

TEST_CASE("verify_q passes with the reference constants") {
    ZetaLineHypotheses h;
    const auto grid = make_q_grid(500.0, 50.0, 0.01, 0.25);
    const auto verdict = verify_q(h, 0.5, grid);
    CHECK(verdict.pass);
    REQUIRE(verdict.checks.size() == 5);
    for (const auto& c : verdict.checks) {
        CHECK(c.max_ratio <= 1.0);
        CHECK(c.max_ratio > 0.0);
    }
    // The half-line constants are tight near t = 0.
    CHECK(verdict.checks[1].max_ratio > 0.99);
    CHECK(verdict.checks[2].max_ratio > 0.99);
}

TEST_CASE("verify_q fails when Q0 is lowered") {
    ZetaLineHypotheses h;
    h.Q0 = 0.01;
    h.Q2 = std::max(h.Q0, h.Q1);
    const auto grid = make_q_grid(10.0, 10.0, 0.01, 0.1);
    const auto verdict = verify_q(h, 0.5, grid);
    CHECK_FALSE(verdict.pass);
    CHECK_FALSE(verdict.checks[0].pass());
    CHECK(verdict.checks[0].argmax_t < 1.0);  // fails at some small t
}

TEST_CASE("Q4 = 1 is allowed by the type but judged by the grid") {
    ZetaLineHypotheses h;
    h.Q4 = 1.0;
    h.Q5 = std::max(h.Q3, h.Q4);
    CHECK(validate(h).ok);
    const auto grid = make_q_grid(30.0, 30.0, 0.02, 0.1);
    const auto verdict = verify_q(h, 0.5, grid);
    // Pass/fail comes purely from the sampled ratios: at t = 0 the sigma = 0
    // right side is log(1)^c2 = 0 while |zeta(0)| = 1/2, so the grid rejects
    // Q4 = 1 even though the type admits it.
    CHECK_FALSE(verdict.checks[3].pass());
    CHECK_FALSE(verdict.pass);
}

}  // TEST_SUITE
