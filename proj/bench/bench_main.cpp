// Serial reference loops against their OpenMP counterparts.

#include "algdeg/suites.hpp"

#include <benchmark/benchmark.h>

using namespace algdeg;

namespace {

FiniteField field_of(int64_t q) { return std::get<FiniteField>(parse_field_spec(std::to_string(q))); }

// Survey of the quotient K over GF(q) at n = 3; state.range(1) is the worker count.
void BM_SurveyK(benchmark::State& state) {
  const auto f = field_of(state.range(0));
  const std::size_t n = 3;
  const auto gens = standard_generators(f, n);
  const auto carrier = basis_K(n, f);
  const auto h = lambda_module(n, gens, carrier, Subspace<FiniteField>::zero(f, n * n * n));
  const auto m = h.module();
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(survey_submodules(m, kDefaultBudget, workers).lattice.size());
}
BENCHMARK(BM_SurveyK)->Args({3, 0})->Args({3, 2})->Args({5, 0})->Args({5, 2})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Reach(benchmark::State& state) {
  const auto f = field_of(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reach_claims(3, f, 20, 7, workers).claims.size());
}
BENCHMARK(BM_Reach)->Args({5, 0})->Args({5, 2})->Args({4, 0})->Args({4, 2})->Unit(benchmark::kMillisecond)->UseRealTime();

// Group action on one vector: direct formula against a materialized matrix.
void BM_ActDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = field_of(5);
  const auto g = standard_generators(f, n).elements.back();
  const auto v = eta(f, n) + delta(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(act(v, g).coords().data());
}
BENCHMARK(BM_ActDirect)->Arg(3)->Arg(5)->Arg(7);

void BM_ActMaterialized(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = field_of(5);
  const auto g = standard_generators(f, n).elements.back();
  const auto m = materialize_action(g);
  const auto v = eta(f, n) + delta(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(m.left_apply(v.coords()).data());
}
BENCHMARK(BM_ActMaterialized)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
