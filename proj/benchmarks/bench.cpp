#include <benchmark/benchmark.h>

#include "sphere_lam/fan.hpp"

namespace sl = sphere_lam;

namespace {

const sl::AllowableCurve& sample_curve() {
  static const auto c = sl::AllowableCurve::open(sl::standard_form(7, 11), {sl::parse_puncture("00"), sl::SpiralDir::CCW},
                                                 {sl::parse_puncture("11"), sl::SpiralDir::CCW});
  return c;
}

void BM_ShearFormula(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl::shear_closed_form(sample_curve()));
}
BENCHMARK(BM_ShearFormula);

void BM_ShearWord(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl::shear_via_word(sample_curve()));
}
BENCHMARK(BM_ShearWord);

void BM_ShearOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl::shear_oracle(sample_curve()));
}
BENCHMARK(BM_ShearOracle);

void BM_FanIndex(benchmark::State& state) {
  for (auto _ : state) {
    sl::FanIndex fan(state.range(0));
    benchmark::DoNotOptimize(fan.cones().size());
  }
}
BENCHMARK(BM_FanIndex)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Locate(benchmark::State& state) {
  const sl::FanIndex fan(3);
  const sl::ShearVector v{-6, 4, 2, -6, 4, 2};
  for (auto _ : state) benchmark::DoNotOptimize(fan.locate(v));
}
BENCHMARK(BM_Locate)->Unit(benchmark::kMicrosecond);

void BM_Flip(benchmark::State& state) {
  const auto t = sl::base_triangulation();
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::flip(t, k));
    k = (k + 1) % 6;
  }
}
BENCHMARK(BM_Flip);

}  // namespace
BENCHMARK_MAIN();
