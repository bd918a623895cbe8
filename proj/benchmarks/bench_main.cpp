#include <benchmark/benchmark.h>

#include "pltopo/complement.hpp"
#include "pltopo/parity.hpp"
#include "pltopo/witness.hpp"

using namespace pltopo;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

// Rectilinear comb with n teeth of width 1 and height 2, 4n + 3 corners.
PLCircuit comb(long n) {
  std::vector<Point> c = {pt(0, 0), pt(2 * n, 0), pt(2 * n, 1)};
  for (long k = n - 1; k >= 0; --k) {
    c.push_back(pt(2 * k + 1, 1));
    c.push_back(pt(2 * k + 1, 3));
    c.push_back(pt(2 * k, 3));
    if (k > 0) c.push_back(pt(2 * k, 1));
  }
  c.push_back(pt(0, 0));
  return PLCircuit::from_corners(std::move(c));
}

void BM_Parity(benchmark::State& state) {
  const PLCircuit f = comb(state.range(0));
  // Below a tooth, so the ray meets the bottom and one tooth.
  const Point q{Rational(1) / Rational(2), Rational(-1)};
  for (auto _ : state) benchmark::DoNotOptimize(parity(q, f.path()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Parity)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ValidateCircuit(benchmark::State& state) {
  const PLPath f = comb(state.range(0)).path();
  for (auto _ : state) benchmark::DoNotOptimize(validate_circuit(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateCircuit)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_GridComponents(benchmark::State& state) {
  const PLCircuit f = comb(8);
  const Rational pitch = pow2(-static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid_components(f, pitch).component_count);
}
BENCHMARK(BM_GridComponents)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SeparationWitness(benchmark::State& state) {
  const PLCircuit f = comb(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(separation_witness(f).c);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeparationWitness)->RangeMultiplier(4)->Range(4, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
