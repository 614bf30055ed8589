#include <benchmark/benchmark.h>

#include "polysse/quotient/counterexample.hpp"
#include "polysse/sse/sse.hpp"
#include "support/random.hpp"

namespace {

using namespace polysse;

void BM_FullRankFactorization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Generator gen(1);
  const QMatrix a = gen.product<Rational>(n, n / 2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(full_rank_factorization(a));
}
BENCHMARK(BM_FullRankFactorization)->DenseRange(2, 8, 2);

void BM_FullRankFactorizationZx(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Generator gen(2);
  const ZMatrix a = gen.product<Integer>(n, n / 2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(full_rank_factorization(a));
}
BENCHMARK(BM_FullRankFactorizationZx)->DenseRange(2, 8, 2);

void BM_DetBareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Generator gen(3);
  const ZMatrix a = gen.matrix<Integer>(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(a));
}
BENCHMARK(BM_DetBareiss)->DenseRange(2, 7);

void BM_DetCofactor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Generator gen(3);
  const ZMatrix a = gen.matrix<Integer>(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_cofactor(a));
}
BENCHMARK(BM_DetCofactor)->DenseRange(2, 7);

void BM_SsePipeline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Generator gen(4);
  std::vector<QMatrix> samples;
  for (int i = 0; i < 16; ++i) samples.push_back(gen.pipeline_sample<Rational>(n, i));
  for (auto _ : state) {
    for (const QMatrix& a : samples) benchmark::DoNotOptimize(sse_to_nonsingular(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()));
}
BENCHMARK(BM_SsePipeline)->DenseRange(2, 5);

void BM_Counterexample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_counterexample());
}
BENCHMARK(BM_Counterexample);

}  // namespace

BENCHMARK_MAIN();
