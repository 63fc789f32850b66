#include <benchmark/benchmark.h>

#include <cmath>

#include "lfball/bcd.hpp"
#include "lfball/dynamics.hpp"
#include "lfball/lfm.hpp"
#include "lfball/num_core.hpp"
#include "lfball/sampling.hpp"
#include "lfball/schur_agler.hpp"

namespace {

using namespace lfball;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return rng.complex_normal_matrix(n, n).hermitian_part();
}

LinearFractionalMap disk_automorphism() {
  const double s = std::sqrt(0.75);
  return validated(LinearFractionalMap(ComplexMatrix{{1.0, 0.0, 0.5}, {0.0, s, 0.0}, {0.5, 0.0, 1.0}}));
}

void BM_HermitianMinEig(benchmark::State& state) {
  const ComplexMatrix m = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_min_eig(m));
}
BENCHMARK(BM_HermitianMinEig)->Arg(4)->Arg(16)->Arg(64);

void BM_HermitianEigenJacobi(benchmark::State& state) {
  const ComplexMatrix m = random_hermitian(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigenJacobi)->Arg(4)->Arg(16)->Arg(64);

void BM_ContractiveScaling(benchmark::State& state) {
  const LinearFractionalMap phi = disk_automorphism();
  for (auto _ : state) benchmark::DoNotOptimize(find_contractive_scaling(phi));
}
BENCHMARK(BM_ContractiveScaling);

void BM_Classify(benchmark::State& state) {
  const LinearFractionalMap phi = bcd_to_ball(counterexample_map(0.25, 2));
  for (auto _ : state) benchmark::DoNotOptimize(classify(phi));
}
BENCHMARK(BM_Classify);

void BM_GramPositivity(benchmark::State& state) {
  const LinearFractionalMap phi = disk_automorphism();
  const auto points = sample_ball(2, static_cast<std::size_t>(state.range(0)));
  const Kernel kernel = [&](const BallPoint& z, const BallPoint& w) { return dbr_kernel(phi, z, w); };
  for (auto _ : state) benchmark::DoNotOptimize(gram_positivity(kernel, points));
}
BENCHMARK(BM_GramPositivity)->Arg(10)->Arg(50);

void BM_DirectIterates(benchmark::State& state) {
  const BCDMap map = counterexample_map(0.25, 4);
  for (auto _ : state) benchmark::DoNotOptimize(direct_iterates(map, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DirectIterates)->Arg(60)->Arg(500);

void BM_SpectralRadiusSequence(benchmark::State& state) {
  const LinearFractionalMap phi = disk_automorphism();
  const ClassificationResult kind = classify(phi);
  const SpaceParams params(2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius_sequence(phi, params, 500, kind));
}
BENCHMARK(BM_SpectralRadiusSequence);

}  // namespace

BENCHMARK_MAIN();
