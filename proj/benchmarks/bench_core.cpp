#include <benchmark/benchmark.h>

#include <cmath>

#include "laguerre/decay_fit.hpp"
#include "laguerre/fields.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/seminorms.hpp"
#include "laguerre/transform.hpp"

namespace {

void BM_GaussLaguerreRule(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laguerre::gauss_laguerre_rule(K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GaussLaguerreRule)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_Analyze(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto M = static_cast<std::uint32_t>(state.range(1));
  const auto f = laguerre::exp_decay_field(dim);
  const auto rule = laguerre::gauss_laguerre_rule(M + 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(laguerre::analyze(f, {laguerre::TruncationKind::Total, M}, rule));
  }
}
BENCHMARK(BM_Analyze)->Args({1, 64})->Args({1, 256})->Args({2, 24})->Args({3, 10});

void BM_EtaSeminorm(benchmark::State& state) {
  const auto M = static_cast<std::uint32_t>(state.range(0));
  const auto a = laguerre::CoefficientField::generate(
      2, {laguerre::TruncationKind::Total, M}, [](const laguerre::MultiIndex& n) {
        return std::exp(-std::sqrt(static_cast<double>(n.order())));
      });
  for (auto _ : state) benchmark::DoNotOptimize(laguerre::eta_seminorm(a, 1.0, 1.0, 60));
}
BENCHMARK(BM_EtaSeminorm)->Arg(20)->Arg(80);

void BM_Classify(benchmark::State& state) {
  const auto a = laguerre::CoefficientField::generate(
      1, {laguerre::TruncationKind::Total, 400}, [](const laguerre::MultiIndex& n) {
        return std::exp(-std::pow(static_cast<double>(n.order()), 2.0 / 3.0));
      });
  for (auto _ : state) benchmark::DoNotOptimize(laguerre::classify_pilipovic(a, 1.5));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
