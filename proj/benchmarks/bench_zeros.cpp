#include <benchmark/benchmark.h>

#include "zetacount/zeros.hpp"

namespace {

void BM_HardyScan(benchmark::State& state) {
    const double t_max = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetacount::hardy_zero_scan(t_max));
    }
    state.SetLabel("zeros to height " + std::to_string(state.range(0)));
}
BENCHMARK(BM_HardyScan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
