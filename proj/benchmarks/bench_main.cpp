#include <benchmark/benchmark.h>

#include "lucas_elliptica/elliptic_core.hpp"
#include "lucas_elliptica/elliptic_poly.hpp"
#include "lucas_elliptica/harness.hpp"
#include "lucas_elliptica/scalar_theta.hpp"
#include "lucas_elliptica/weighted_algebra.hpp"
#include "lucas_elliptica/word_algebra.hpp"

namespace le = lucas_elliptica;

static void BM_Theta(benchmark::State& state) {
  const le::Complex z(0.7, 0.2);
  const le::Complex p(static_cast<double>(state.range(0)) / 100.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(le::theta(z, p));
}
BENCHMARK(BM_Theta)->Arg(5)->Arg(25)->Arg(50)->Arg(90);

static void BM_EllipticBinom(benchmark::State& state) {
  const le::EllipticParams ep;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(le::elliptic_binom(n, n / 2, ep));
}
BENCHMARK(BM_EllipticBinom)->Arg(4)->Arg(8)->Arg(16);

static void BM_FibWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(le::fib_word(n));
}
BENCHMARK(BM_FibWord)->Arg(8)->Arg(12)->Arg(16)->Arg(-8);

// (x + y)^n has 2^n words; each is normal ordered run by run.
static void BM_NormalOrderBinomial(benchmark::State& state) {
  const le::WordPoly sum = le::WordPoly::x() + le::WordPoly::y();
  le::WordPoly power(le::Rational(1));
  for (int i = 0; i < state.range(0); ++i) power = power * sum;
  for (auto _ : state) benchmark::DoNotOptimize(le::normal_order(power));
}
BENCHMARK(BM_NormalOrderBinomial)->Arg(4)->Arg(8)->Arg(10);

static void BM_WeightedEulerCassini(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(le::check_weighted_euler_cassini(n, 1));
}
BENCHMARK(BM_WeightedEulerCassini)->Arg(3)->Arg(6)->Arg(-3);

static void BM_EllipticEulerCassini(benchmark::State& state) {
  const le::EllipticParams ep;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(le::check_elliptic_euler_cassini(n, 1, ep));
}
BENCHMARK(BM_EllipticEulerCassini)->Arg(3)->Arg(5);

static void BM_VerifySuite(benchmark::State& state) {
  le::RunConfig cfg;
  cfg.trials = 4;
  cfg.jobs = 1;
  const auto suite = static_cast<le::Suite>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(le::run_suite(suite, cfg));
}
BENCHMARK(BM_VerifySuite)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
