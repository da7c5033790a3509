#include <benchmark/benchmark.h>

#include "sta/propagators.hpp"

namespace {

using namespace sta::prop;

void BM_FourierG(benchmark::State& state) {
  FourierGridConfig cfg;
  cfg.grid = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(fourier_G({1.0, 0.5, 0.0}, 0.05, cfg));
}
BENCHMARK(BM_FourierG)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_KernelApply(benchmark::State& state) {
  const auto P = sta::km::CV::spacetime(sta::ga::Multivector::gen(0));
  const Four p{0.7, 0.2, -0.1, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_apply(p, P, 1.0));
}
BENCHMARK(BM_KernelApply);

}  // namespace
