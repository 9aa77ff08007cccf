#include <benchmark/benchmark.h>

#include "permpoly/experiment.hpp"
#include "permpoly/group.hpp"
#include "permpoly/lift.hpp"
#include "permpoly/serialize.hpp"
#include "permpoly/transposition.hpp"

using namespace permpoly;

static void BM_TranspositionPoly(benchmark::State& state) {
  const Ring f = Ring::field(make_field(static_cast<std::uint32_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(transposition_poly(f(1), f(3)));
}
BENCHMARK(BM_TranspositionPoly)->Arg(5)->Arg(13)->Arg(101)->Arg(251);

static void BM_CarlitzExpansion(benchmark::State& state) {
  const Ring f = Ring::field(make_field(static_cast<std::uint32_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(carlitz_poly(f(1)));
}
BENCHMARK(BM_CarlitzExpansion)->Arg(5)->Arg(7)->Arg(13);

static void BM_FunctionTable(benchmark::State& state) {
  const Ring f = parse_ring("gf:2^8");
  const Polynomial p = transposition_poly(f.element(3), f.element(77));
  for (auto _ : state) benchmark::DoNotOptimize(function_table(p));
}
BENCHMARK(BM_FunctionTable);

static void BM_NoebauerVsBruteForce(benchmark::State& state) {
  const Ring r = parse_ring("zmod:7^3");
  const Polynomial f = Polynomial::from_ints(r, {3, 2, 0, 7, 0, 0, 0, 49});
  const bool brute = state.range(0) != 0;
  for (auto _ : state) {
    if (brute) {
      benchmark::DoNotOptimize(brute_force_is_permutation(f));
    } else {
      benchmark::DoNotOptimize(noebauer_is_permutation(f));
    }
  }
}
BENCHMARK(BM_NoebauerVsBruteForce)->Arg(0)->Arg(1);

static void BM_PolynomialGroup(benchmark::State& state) {
  const Ring r = parse_ring(state.range(0) == 0 ? "zmod:3^2" : "fqu:3^1,2");
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_permutation_group(r).order());
}
BENCHMARK(BM_PolynomialGroup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Experiment(benchmark::State& state) {
  const Ring r = parse_ring("zmod:3^2");
  for (auto _ : state) benchmark::DoNotOptimize(question_experiment(r, SamplingConfig{}).a_size);
}
BENCHMARK(BM_Experiment)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
