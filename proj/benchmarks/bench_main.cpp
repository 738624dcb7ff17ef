#include <benchmark/benchmark.h>

#include "codisc/discrepancy.hpp"
#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"
#include "codisc/lp.hpp"

using namespace codisc;

namespace {

void BM_LambdaProfile(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LambdaProfile p = lambda_profile(n);
    benchmark::DoNotOptimize(p.values.data());
  }
}
BENCHMARK(BM_LambdaProfile)->Arg(15)->Arg(31)->Arg(63);

void BM_KrawtchoukTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    KrawtchoukTable table(n);
    benchmark::DoNotOptimize(&table);
  }
}
BENCHMARK(BM_KrawtchoukTable)->Arg(15)->Arg(23)->Arg(31);

void BM_LambdaHat(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LambdaHat hat = lambda_hat(n);
    benchmark::DoNotOptimize(hat.coeffs.data());
  }
}
BENCHMARK(BM_LambdaHat)->Arg(15)->Arg(31);

void BM_GolayDistribution(benchmark::State& state) {
  BinaryCode g = golay23();
  for (auto _ : state) {
    auto dist = distance_distribution(g);
    benchmark::DoNotOptimize(dist.A.data());
  }
}
BENCHMARK(BM_GolayDistribution);

void BM_MacWilliams(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<Rational> A(static_cast<size_t>(n) + 1, Rational(1));
  for (auto _ : state) {
    auto dual = macwilliams_forward(A, Rational(64));
    benchmark::DoNotOptimize(dual.data());
  }
}
BENCHMARK(BM_MacWilliams)->Arg(15)->Arg(23);

void BM_BruteDiscrepancy(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BinaryCode z = random_code(n, 32, 1);
  for (auto _ : state) {
    Rational d = discrepancy_brute(z, 20, 1);
    benchmark::DoNotOptimize(&d);
  }
}
BENCHMARK(BM_BruteDiscrepancy)->Arg(10)->Arg(14);

void BM_PrimalLP(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rational N(pow2(static_cast<unsigned long>((n + 1) / 2)));
  for (auto _ : state) {
    PrimalBound b = primal_discrepancy_lp(n, N);
    benchmark::DoNotOptimize(&b);
  }
}
BENCHMARK(BM_PrimalLP)->Arg(7)->Arg(15)->Arg(23);

}  // namespace

BENCHMARK_MAIN();
