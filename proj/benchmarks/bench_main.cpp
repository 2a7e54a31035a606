#include <benchmark/benchmark.h>

#include <random>

#include "tropexp/chambers.hpp"
#include "tropexp/polytope.hpp"

namespace {

using namespace tropexp;

Polytope random_polytope(std::mt19937_64& rng, std::size_t n, std::size_t points) {
  std::uniform_int_distribution<long> c(-3, 3);
  for (;;) {
    std::vector<Covector> pts;
    for (std::size_t i = 0; i < points; ++i) {
      Covector p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = Scalar(c(rng));
      pts.push_back(std::move(p));
    }
    Polytope p = convex_hull(pts);
    if (p.is_full_dimensional()) return p;
  }
}

void BM_MixedVolume(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Polytope> ps;
  for (std::size_t i = 0; i < n; ++i) ps.push_back(random_polytope(rng, n, n + 4));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(ps));
}
BENCHMARK(BM_MixedVolume)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ConvexHull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-5, 5);
  std::vector<Covector> pts;
  for (int i = 0; i < 20; ++i) {
    Covector p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = Scalar(c(rng));
    pts.push_back(std::move(p));
  }
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_StableProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const TropicalFan a = skeleton_fan(random_polytope(rng, n, n + 3), 1);
  const TropicalFan b = skeleton_fan(random_polytope(rng, n, n + 3), 1);
  for (auto _ : state) benchmark::DoNotOptimize(stable_product(a, b));
}
BENCHMARK(BM_StableProduct)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SelfIntersection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropicalFan k = skeleton_fan(unit_cube(n), 1);
  for (auto _ : state) {
    TropicalFan acc = k;
    for (std::size_t i = 1; i < n; ++i) acc = stable_product(acc, k);
    benchmark::DoNotOptimize(zero_cone_value(acc));
  }
}
BENCHMARK(BM_SelfIntersection)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_WeakDensity(benchmark::State& state) {
  const FieldDescriptor q2 = FieldDescriptor::quadratic(2);
  const std::vector<ExpSum> system{parse_expsum("1 + exp(z1) + 2*exp(sqrt2*z2)", q2, 2),
                                   parse_expsum("exp(z1 + z2) - 3 + exp(-z1)", q2, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(weak_density(system));
}
BENCHMARK(BM_WeakDensity)->Unit(benchmark::kMillisecond);

void BM_ZeroLattices(benchmark::State& state) {
  const FieldDescriptor q2 = FieldDescriptor::quadratic(2);
  const std::vector<ExpSum> system{parse_expsum("exp(z1) - 1", q2, 2), parse_expsum("exp(sqrt2*z1 + z2) - 1", q2, 2)};
  for (auto _ : state) {
    const ModelSystem m = model_system(system);
    const SubspaceFamily fam = nontransversal_loci(m.fan, m.winding_image);
    benchmark::DoNotOptimize(density_sum(zero_lattices(m, sample_chamber(fam, m.fan, m.winding_image, 1))));
  }
}
BENCHMARK(BM_ZeroLattices)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
