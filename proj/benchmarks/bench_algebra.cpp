#include <benchmark/benchmark.h>

#include "plancalc/affine.hpp"
#include "plancalc/depth.hpp"
#include "plancalc/tl.hpp"

using namespace plancalc;

namespace {

std::shared_ptr<TLQuotient> sqrt2_quotient() {
  const Scalar d = Scalar::field_generator(NumberField::sqrt(2));
  return std::make_shared<TLQuotient>(tl_instance(d, d));
}

void BM_TLMultiply(benchmark::State& st) {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dm());
  const Color c{static_cast<int>(st.range(0)), 1};
  const Element x = tl->basis(c, tl->dim(c) / 2), y = tl->basis(c, tl->dim(c) - 1);
  for (auto _ : st) benchmark::DoNotOptimize(pa_mult(*tl, x, y));
}
BENCHMARK(BM_TLMultiply)->Arg(3)->Arg(5)->Arg(7);

void BM_TLGram(benchmark::State& st) {
  const auto tl = tl_instance(Scalar::dp(), Scalar::dp());
  for (auto _ : st) benchmark::DoNotOptimize(tl->gram({static_cast<int>(st.range(0)), 1}));
}
BENCHMARK(BM_TLGram)->Arg(3)->Arg(4)->Arg(5);

void BM_QuotientDim(benchmark::State& st) {
  for (auto _ : st) {
    const auto Q = sqrt2_quotient();
    benchmark::DoNotOptimize(Q->dim({static_cast<int>(st.range(0)), 1}));
  }
}
BENCHMARK(BM_QuotientDim)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Depth(benchmark::State& st) {
  for (auto _ : st) {
    const auto Q = sqrt2_quotient();
    benchmark::DoNotOptimize(compute_depth(*Q, 4));
  }
}
BENCHMARK(BM_Depth)->Unit(benchmark::kMillisecond);

void BM_AffineHom(benchmark::State& st) {
  for (auto _ : st) {
    const AffineCategory A(sqrt2_quotient(), static_cast<int>(st.range(0)));
    benchmark::DoNotOptimize(A.hom_space_dim({1, 1}, {1, 1}));
  }
}
BENCHMARK(BM_AffineHom)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
