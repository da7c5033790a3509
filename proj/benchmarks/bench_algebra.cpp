#include <benchmark/benchmark.h>

#include <random>

#include "sta/ga.hpp"
#include "sta/grassmann.hpp"
#include "sta/spinor.hpp"

namespace {

using sta::ga::Multivector;

Multivector random_mv(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-1, 1);
  Multivector m;
  for (auto& x : m.c) x = u(g);
  return m;
}

void BM_GeometricProduct(benchmark::State& state) {
  std::mt19937_64 g(1);
  const Multivector a = random_mv(g), b = random_mv(g);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct);

void BM_ExpBivector(benchmark::State& state) {
  // simple bivector: a boost along x, which squares to a scalar
  const Multivector x = 0.7 * (Multivector::gen(1) * Multivector::gen(0));
  for (auto _ : state) benchmark::DoNotOptimize(sta::ga::exp_bivector_like(x));
}
BENCHMARK(BM_ExpBivector);

void BM_MatrixRep(benchmark::State& state) {
  std::mt19937_64 g(3);
  const Multivector a = random_mv(g);
  for (auto _ : state) benchmark::DoNotOptimize(sta::rep::matrix_rep(a));
}
BENCHMARK(BM_MatrixRep);

void BM_SpinorRoundTrip(benchmark::State& state) {
  std::mt19937_64 g(4);
  const Multivector psi = random_mv(g).even();
  for (auto _ : state) benchmark::DoNotOptimize(sta::spinor::to_operator(sta::spinor::to_covariant(psi)));
}
BENCHMARK(BM_SpinorRoundTrip);

void BM_GrassmannProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 g(5);
  const auto a = sta::grassmann::random_element(n, g), b = sta::grassmann::random_element(n, g);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GrassmannProduct)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
