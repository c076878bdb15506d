// Serial vs OpenMP step-kernel throughput across grid sizes.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "pmelab/kernels.hpp"

namespace {

using namespace pmelab::kernels;

std::vector<double> barenblatt_like(int n) {
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        const double s = -12.0 + 24.0 * (i + 0.5) / n;
        w[i] = std::max(0.0, 0.36 - s * s / 12.0);
    }
    return w;
}

void bench_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> w = barenblatt_like(n), W(n), out(n);
    const double m = 2.0, h = 24.0 / n;
    const double dt = 0.4 * h * h / (2.0 * m * 0.36);
    const BCPack bc;
    for (auto _ : state) {
        fv_step_serial(w.data(), W.data(), out.data(), n, m, PowCase::Two, h, dt, 0.0, bc);
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * n);
}

void bench_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> w = barenblatt_like(n), W(n), out(n);
    const double m = 2.0, h = 24.0 / n;
    const double dt = 0.4 * h * h / (2.0 * m * 0.36);
    const BCPack bc;
    for (auto _ : state) {
        fv_step_omp(w.data(), W.data(), out.data(), n, m, PowCase::Two, h, dt, 0.0, bc);
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(bench_serial)->Arg(1024)->Arg(4096)->Arg(16384)->Arg(65536)->Arg(262144);
BENCHMARK(bench_omp)->Arg(1024)->Arg(4096)->Arg(16384)->Arg(65536)->Arg(262144);

BENCHMARK_MAIN();
