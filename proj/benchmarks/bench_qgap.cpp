#include <benchmark/benchmark.h>

#include "qgap/coefficients.hpp"
#include "qgap/evaluator.hpp"
#include "qgap/forms.hpp"
#include "qgap/quadratic.hpp"

using namespace qgap;

static void BM_MulDelta(benchmark::State& state) {
  const auto d = forms::delta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d * d);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulDelta)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_InvertDelta(benchmark::State& state) {
  const auto d = forms::delta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invert(d));
}
BENCHMARK(BM_InvertDelta)->RangeMultiplier(2)->Range(64, 1024);

static void BM_JInvariant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(forms::j_invariant(state.range(0)));
}
BENCHMARK(BM_JInvariant)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

static void BM_NegPowerEinf4(benchmark::State& state) {
  const std::int64_t s = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(neg_power_Einf4(s, s + 1));
}
BENCHMARK(BM_NegPowerEinf4)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

static void BM_ConstantTermDeltaPower(benchmark::State& state) {
  const auto e = forms::FormExpr::parse("Delta^-" + std::to_string(state.range(0)));
  for (auto _ : state) {
    forms::Evaluator ev;  // cold memo each time
    benchmark::DoNotOptimize(ev.constant_term(e));
  }
}
BENCHMARK(BM_ConstantTermDeltaPower)->Arg(32)->Arg(64)->Arg(140)->Unit(benchmark::kMillisecond);

static void BM_CoefficientData(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coefficients::CoefficientData::compute(state.range(0)));
}
BENCHMARK(BM_CoefficientData)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_ThetaD4Sum(benchmark::State& state) {
  auto A = quadratic::d4();
  for (int k = 1; k < state.range(0); ++k) A = quadratic::direct_sum(A, quadratic::d4());
  for (auto _ : state) benchmark::DoNotOptimize(quadratic::theta(A, 8));
}
BENCHMARK(BM_ThetaD4Sum)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ThetaE8(benchmark::State& state) {
  const auto A = quadratic::e8();
  for (auto _ : state) benchmark::DoNotOptimize(quadratic::theta(A, state.range(0)));
}
BENCHMARK(BM_ThetaE8)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
