#include <benchmark/benchmark.h>

#include "dpfib/chow.hpp"
#include "dpfib/classifier.hpp"
#include "dpfib/cones.hpp"
#include "dpfib/nf.hpp"

namespace {

using namespace dpfib;

void BM_ChowMulRank4(benchmark::State& state) {
  const auto bundle = chow::BundleSpec::make(4, {0, 2, 2, 2});
  const chow::ChowClass a(bundle, 2, Rational(3), Rational(-5, 2));
  const chow::ChowClass b(bundle, 2, Rational(-7, 3), Rational(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_ChowMulRank4);

void BM_EnumerateDp2Box(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp::enumerate_dp2_box(10, 20));
  }
}
BENCHMARK(BM_EnumerateDp2Box);

void BM_ClassifyDp1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rigidity::classify_dp1_upto(40));
  }
}
BENCHMARK(BM_ClassifyDp1);

void BM_CertificateReduction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf::reduce_to_quadratic(nf::NFCase::Dp2, {.beta = 2}));
  }
}
BENCHMARK(BM_CertificateReduction);

void BM_FeasibilityProbe(benchmark::State& state) {
  const auto sys = nf::make_system(nf::NFCase::Dp1EpsZero, {.n2 = 3}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf::feasibility_search(sys, {}, 256, 1));
  }
}
BENCHMARK(BM_FeasibilityProbe);

void BM_Thresholds(benchmark::State& state) {
  const dp::Model m = dp::build_dp1(0, 0, 1, 2);
  const dp::DivisorClassV d{Rational(2), Rational(-2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cones::thresholds(m, d));
  }
}
BENCHMARK(BM_Thresholds);

}  // namespace

BENCHMARK_MAIN();
