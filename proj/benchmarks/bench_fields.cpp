#include <benchmark/benchmark.h>

#include "sta/fields.hpp"
#include "sta/km.hpp"

namespace {

using namespace sta;

const fields::Octet& octet() {
  static const fields::Octet o = fields::build_octet(
      {modes::OnShellMomentum(1.0, 0.3, -0.2, 0.5), modes::OnShellMomentum(1.0, -0.4, 0.1, 0.2)}, {1.0, 0.5});
  return o;
}

void BM_BuildOctet(benchmark::State& state) {
  const modes::OnShellMomentum p(1.0, 0.3, -0.2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(fields::build_octet(p));
}
BENCHMARK(BM_BuildOctet);

void BM_KMResidual(benchmark::State& state) {
  const auto K = km::build_K(octet());
  for (auto _ : state) benchmark::DoNotOptimize(km::km_residual(K, km::Kind::K, 1.0).amp_norm());
}
BENCHMARK(BM_KMResidual);

void BM_KMCurrentDivergence(benchmark::State& state) {
  const auto K = km::build_K(octet());
  const fields::Point x{0.1, 0.2, -0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(km::current_divergence(K, x));
}
BENCHMARK(BM_KMCurrentDivergence);

}  // namespace
