#include <benchmark/benchmark.h>

#include "stochgeo/bodies.hpp"
#include "stochgeo/functionals.hpp"
#include "stochgeo/sampling.hpp"
#include "stochgeo/shadow.hpp"

using namespace stochgeo;

namespace {

void BM_ExactPolar(benchmark::State& state) {
  const auto p = random_ellipse_polygon(static_cast<int>(state.range(0)), 1, 0, false);
  for (auto _ : state) benchmark::DoNotOptimize(area(polar(p)));
}
BENCHMARK(BM_ExactPolar)->Arg(4)->Arg(16)->Arg(64);

void BM_ConvexHull(benchmark::State& state) {
  const auto sq = realize(BodySpec::parse("square:4"));
  const auto pts = sample_matrix(sq, static_cast<std::size_t>(state.range(0)), 3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Arg(8)->Arg(128)->Arg(1024);

void BM_SantaloPoint(benchmark::State& state) {
  const auto p = random_ellipse_polygon(static_cast<int>(state.range(0)), 2, 0, false);
  for (auto _ : state) benchmark::DoNotOptimize(santalo_point(p));
}
BENCHMARK(BM_SantaloPoint)->Arg(3)->Arg(8)->Arg(32);

void BM_PolarQuadrature(benchmark::State& state) {
  const auto sq = realize(BodySpec::parse("square:4"));
  const auto pts = sample_matrix(sq, 16, 4, 0);
  const auto h = SupportEvaluator::of_composition(pts, CoefficientBody::lq_ball(16, 3.0));
  QuadratureOptions q;
  q.panels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polar_volume_quadrature(h, q));
}
BENCHMARK(BM_PolarQuadrature)->Arg(64)->Arg(256)->Arg(1024);

void BM_CentroidBodyExact(benchmark::State& state) {
  const auto hex = realize(BodySpec::parse("kgon:6:4"));
  for (auto _ : state) benchmark::DoNotOptimize(polar_centroid_volume(hex, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_CentroidBodyExact)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EstimateW(benchmark::State& state) {
  const auto hex = realize(BodySpec::parse("kgon:6:4"));
  EstimatorOptions o;
  o.samples = 10'000;
  o.seed = 5;
  o.workers = 1;
  const auto c = CoefficientBody::cross_polytope(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_W(hex, c, 1.0, o));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(o.samples));
}
BENCHMARK(BM_EstimateW)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EstimateWSantalo(benchmark::State& state) {
  const auto hex = realize(BodySpec::parse("kgon:6:4"));
  EstimatorOptions o;
  o.samples = 10'000;
  o.seed = 6;
  o.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_W_santalo(hex, 3, 1.0, o));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(o.samples));
}
BENCHMARK(BM_EstimateWSantalo)->Unit(benchmark::kMillisecond);

void BM_SweepProfile(benchmark::State& state) {
  const auto m = make_movement(regular_polygon(8), 1, true);
  const auto grid = uniform_t_grid(m, 21);
  const auto c = CoefficientBody::cross_polytope(4);
  const auto s = couple_sample(m, 4, 7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_convexity_profile(m, c, 1.0, s, grid));
}
BENCHMARK(BM_SweepProfile);

}  // namespace

BENCHMARK_MAIN();
