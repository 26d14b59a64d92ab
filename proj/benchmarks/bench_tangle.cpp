#include <benchmark/benchmark.h>

#include <random>

#include "plancalc/planar_algebra.hpp"
#include "plancalc/pivotal.hpp"

using namespace plancalc;

namespace {

PlanarTangle sample(std::uint64_t seed, int k, int discs) {
  std::mt19937_64 rng(seed);
  RandomTangleOptions o;
  o.external = {k, 1};
  o.discs = discs;
  o.max_k = k;
  o.max_width = 10;
  return random_tangle(rng, o);
}

void BM_Canonicalize(benchmark::State& st) {
  const RawTangle raw = sample(1, static_cast<int>(st.range(0)), 3).to_raw();
  for (auto _ : st) benchmark::DoNotOptimize(PlanarTangle::from_raw(raw));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(4)->Arg(6);

void BM_Compose(benchmark::State& st) {
  const PlanarTangle T = sample(2, static_cast<int>(st.range(0)), 2);
  const PlanarTangle S = sample(3, T.color(1).k, 2);
  const PlanarTangle U = T.color(1) == S.external() ? S : identity_tangle(T.color(1));
  for (auto _ : st) benchmark::DoNotOptimize(compose_at(T, 1, U));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(4);

void BM_StandardForm(benchmark::State& st) {
  const PlanarTangle T = sample(4, static_cast<int>(st.range(0)), 2);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(standard_form(T, seed++));
}
BENCHMARK(BM_StandardForm)->Arg(2)->Arg(3);

void BM_PivotalEvaluate(benchmark::State& st) {
  const PivotalModel M = build_model(2, {2, 1, 1, 3}, mpq_class(1, 2));
  const PlanarTangle T = builtin_tangle(BuiltinKind::Multiplication, {static_cast<int>(st.range(0)), 1});
  std::vector<mpq_class> a(1u << (2 * st.range(0)), 1);
  const SlicePlan plan = standard_form(T, 0);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_plan(M, plan, {a, a}));
}
BENCHMARK(BM_PivotalEvaluate)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
