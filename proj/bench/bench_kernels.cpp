// Serial reference kernels against their OpenMP versions. Thread count comes
// from OMP_NUM_THREADS.

#include "dispersive/corpus.hpp"
#include "dispersive/norms.hpp"
#include "dispersive/spectral.hpp"
#include "dispersive/stein.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace dispersive;

namespace {

struct SteinData {
    Field f, mid, slope;
    explicit SteinData(std::size_t n)
        : f(gaussian(Grid(n, 16.0))),
          mid(apply_multiplier(
              f, [h = f.grid().spacing()](double xi) { return std::polar(1.0, 0.5 * xi * h); }, Nyquist::zero)),
          slope(derivative(f, 1)) {}
    kernels::SteinInputs inputs() const {
        return {f.values(), mid.values(), slope.values(), f.grid().spacing(), f.grid().half_length(), 0.5,
                SteinExtension::zero};
    }
};

template <void (*Kernel)(const kernels::SteinInputs&, std::span<double>)>
void stein(benchmark::State& state) {
    const SteinData data(static_cast<std::size_t>(state.range(0)));
    std::vector<double> out(data.f.size());
    for (auto _ : state) {
        Kernel(data.inputs(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(state.range(0));
}

template <ApResult (*Kernel)(std::span<const double>, double)>
void ap(benchmark::State& state) {
    const auto w = power_weight(Grid(static_cast<std::size_t>(state.range(0)), 16.0), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, 2.0));
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(stein<kernels::stein_square_serial>)->Name("stein_square/serial")->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(stein<kernels::stein_square_parallel>)->Name("stein_square/parallel")->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(ap<kernels::ap_constant_serial>)->Name("ap_constant/serial")->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(ap<kernels::ap_constant_parallel>)->Name("ap_constant/parallel")->RangeMultiplier(2)->Range(256, 2048);

BENCHMARK_MAIN();
