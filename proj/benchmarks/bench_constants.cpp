#include <benchmark/benchmark.h>

#include "zetacount/constants.hpp"
#include "zetacount/optimize.hpp"

namespace {

const zetacount::ContourParams kRow2{1.025253504, 1.182375395, 0.009944751381};

void BM_AssembleConstants(benchmark::State& state) {
    zetacount::ZetaLineHypotheses hyp;
    auto p = kRow2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::assemble_constants(p, hyp));
        p.eta += 1e-12;
    }
}
BENCHMARK(BM_AssembleConstants);

void BM_Kappa3(benchmark::State& state) {
    zetacount::ZetaLineHypotheses hyp;
    auto p = kRow2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::kappa3(p, hyp));
        p.eta += 1e-12;
    }
}
BENCHMARK(BM_Kappa3);

void BM_OptimizeShortSearch(benchmark::State& state) {
    zetacount::Objective obj{zetacount::ObjectiveMode::min_c1};
    zetacount::OptimizeSettings settings;
    settings.budget = 200;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zetacount::optimize(obj, {{1.0001, 1.06, 1e-5}}, {}, settings));
    }
}
BENCHMARK(BM_OptimizeShortSearch)->Unit(benchmark::kMillisecond);

}  // namespace
