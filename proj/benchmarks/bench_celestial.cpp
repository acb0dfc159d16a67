#include <benchmark/benchmark.h>

#include <celestial/celestial.hpp>
#include <random>

namespace {

using namespace celestial;

SL2CElement sample_spinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    if (std::abs(a) < 0.1) continue;
    return SL2CElement(a, b, c, (1.0 + b * c) / a);
  }
}

std::vector<StarRecord> sample_catalog(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ra(0.0, 359.999), sin_dec(-1.0, 1.0), mag(-1.0, 7.0), temp(2500.0, 30000.0);
  std::vector<StarRecord> stars(n);
  for (std::size_t i = 0; i < n; ++i)
    stars[i] = {"s" + std::to_string(i), ra(rng), std::asin(sin_dec(rng)) * 57.29577951308232, mag(rng), temp(rng)};
  return stars;
}

void BM_SpinorToLorentz(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const SL2CElement s = sample_spinor(rng);
  for (auto _ : state) benchmark::DoNotOptimize(sl2c_to_lorentz(s));
}
BENCHMARK(BM_SpinorToLorentz);

void BM_Lift(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const LorentzMatrix l = sl2c_to_lorentz(sample_spinor(rng));
  for (auto _ : state) benchmark::DoNotOptimize(lift_lorentz_to_sl2c(l));
}
BENCHMARK(BM_Lift);

void BM_StandardDecompose(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const LorentzMatrix l = sl2c_to_lorentz(sample_spinor(rng));
  for (auto _ : state) benchmark::DoNotOptimize(standard_decompose(l));
}
BENCHMARK(BM_StandardDecompose);

void BM_MoebiusApply(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const MoebiusTransform t(sample_spinor(rng));
  SpherePoint q = SpherePoint::from_complex(Complex(0.3, -0.7));
  for (auto _ : state) {
    q = moebius_apply(t, q);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_MoebiusApply);

void BM_ActExact(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const LorentzMatrix l = sl2c_to_lorentz(sample_spinor(rng));
  const BondiPoint b{0.5, 1e6, SpherePoint::from_complex(Complex(0.2, 0.4))};
  for (auto _ : state) benchmark::DoNotOptimize(act_exact(l, b));
}
BENCHMARK(BM_ActExact);

void BM_TransformCatalog(benchmark::State& state) {
  const auto stars = sample_catalog(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transform_catalog(stars, Rapidity{1.2}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransformCatalog)->Arg(1000)->Arg(10000);

void BM_Render(benchmark::State& state) {
  const auto stars = transform_catalog(sample_catalog(10000), Rapidity{1.2});
  RenderSpec spec;
  spec.format = state.range(0) == 0 ? ImageFormat::Svg : ImageFormat::Ppm;
  spec.hemisphere = Hemisphere::Both;
  spec.width = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(render(stars, spec));
}
BENCHMARK(BM_Render)->Arg(0)->Arg(1)->ArgNames({"ppm"});

}  // namespace

BENCHMARK_MAIN();
