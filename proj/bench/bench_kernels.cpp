// Serial reference vs OpenMP batch kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "surdbits/findiff.hpp"
#include "surdbits/parallel.hpp"

using namespace surdbits;

namespace {

std::vector<QuadraticSurd> nonsquare_lambdas(unsigned long limit) {
  std::vector<QuadraticSurd> out;
  for (unsigned long s = 2; s <= limit; ++s) {
    if (!is_perfect_square(Nat(s))) out.push_back(lambda_of(Nat(s)));
  }
  return out;
}

EvalContext context(const benchmark::State& state) {
  return EvalContext{PinOptions{}, state.range(0) == 0 ? ExecPolicy::Serial : ExecPolicy::Parallel};
}

void BM_BatchDigits(benchmark::State& state) {
  const auto points = nonsquare_lambdas(200);
  const auto ctx = context(state);
  for (auto _ : state) benchmark::DoNotOptimize(batch_digits(points, static_cast<Index>(state.range(1)), ctx));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_TotalDiff(benchmark::State& state) {
  const QuadraticSurd omega = lambda_of(Nat(2));
  const PerturbationPair pair = apply_x_flips(omega, {Flip{1, 1}, toggle_flip(omega, 7)});
  const auto ctx = context(state);
  for (auto _ : state) benchmark::DoNotOptimize(total_diff_check(pair, 64, static_cast<Index>(state.range(1)), ctx));
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_Invariance(benchmark::State& state) {
  const PerturbationPair pair = apply_x_flips(lambda_of(Nat(2)), {Flip{1, 1}});
  const auto ctx = context(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariance_check(pair.nu(), pair, static_cast<Index>(state.range(1)), 256, ctx));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_BatchDigits)->ArgsProduct({{0, 1}, {4096, 65536}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotalDiff)->ArgsProduct({{0, 1}, {512, 2048}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Invariance)->ArgsProduct({{0, 1}, {6, 10}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
