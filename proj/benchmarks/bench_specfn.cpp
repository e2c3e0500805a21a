#include <benchmark/benchmark.h>

#include <complex>

#include "zetacount/specfn.hpp"

namespace {

void BM_ZetaReal(benchmark::State& state) {
    double sigma = 1.0 + 1e-5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::zeta_real(sigma));
        sigma += 1e-9;  // defeat caching of a fixed argument
    }
}
BENCHMARK(BM_ZetaReal);

void BM_ZetaComplex(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    std::complex<double> s{0.5, t};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::zeta_complex(s));
        s += std::complex<double>{0.0, 1e-9};
    }
    state.SetLabel("height " + std::to_string(state.range(0)));
}
BENCHMARK(BM_ZetaComplex)->Arg(50)->Arg(500)->Arg(5000);

void BM_LogGammaIm(benchmark::State& state) {
    std::complex<double> z{0.25, 500.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::log_gamma_im(z));
        z += std::complex<double>{0.0, 1e-9};
    }
}
BENCHMARK(BM_LogGammaIm);

void BM_HardyZ(benchmark::State& state) {
    double t = 500.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::hardy_z(t));
        t += 1e-9;
    }
}
BENCHMARK(BM_HardyZ);

}  // namespace
