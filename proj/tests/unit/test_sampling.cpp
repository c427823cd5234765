#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "stat_helpers.hpp"
#include "stochgeo/bodies.hpp"
#include "stochgeo/philox.hpp"
#include "stochgeo/sampling.hpp"

using namespace stochgeo;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("unit conversion stays inside the open interval") {
  CHECK(to_unit_open(0, 0) > 0.0);
  CHECK(to_unit_open(0xffffffff, 0xffffffff) < 1.0);
  CHECK(to_unit_open(0x80000000, 0) == doctest::Approx(0.5));
}

TEST_CASE("streams are pure functions of their coordinates") {
  const SeededStream a{42, 7, 0}, b{42, 7, 0}, c{43, 7, 0}, d{42, 8, 0}, e{42, 7, 1};
  for (std::uint32_t k = 0; k < 6; ++k) CHECK(a.uniform(k) == b.uniform(k));
  CHECK(a.uniform(0) != c.uniform(0));
  CHECK(a.uniform(0) != d.uniform(0));
  CHECK(a.uniform(0) != e.uniform(0));
  CHECK(a.uniform(0) != a.uniform(1));
  CHECK(a.uniform(1) != a.uniform(2));
  const SeededStream big{1, 0x1'0000'0000ULL, 0};
  CHECK(big.uniform(0) != SeededStream{1, 0, 0}.uniform(0));
}

TEST_CASE("uniform draws pass a KS test against U(0, 1)") {
  std::vector<double> xs;
  for (std::uint64_t i = 0; i < 20000; ++i) xs.push_back(SeededStream{3, i, 0}.uniform(i % 4));
  CHECK(testutil::ks_statistic(xs, [](double x) { return x; }) < testutil::kKs99);
}

TEST_CASE("triangulation covers the polygon") {
  const auto p = regular_polygon(7);
  const Triangulation tri(p);
  CHECK(tri.triangle_count() == 5);
  double total = 0.0;
  for (std::size_t i = 0; i < tri.triangle_count(); ++i) total += tri.triangle_area(i);
  CHECK(total == doctest::Approx(area(p)));
  CHECK(tri.total_area() == doctest::Approx(area(p)));
  CHECK(tri.locate(1e-12) == 0);
  CHECK(tri.locate(1.0 - 1e-12) == 4);
}

TEST_CASE("samples land inside the polygon") {
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto p = random_ellipse_polygon(3 + static_cast<int>(k % 7), 9, k, false);
    const PolygonSampler s(p);
    for (std::uint64_t i = 0; i < 500; ++i) CHECK(contains(p, s(SeededStream{1, i})));
  }
}

TEST_CASE("square marginals are uniform (KS at 99%)") {
  const auto sq = realize(BodySpec::parse("square:4"));
  const PolygonSampler s(sq);
  std::vector<double> xs, ys;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const auto q = s(SeededStream{11, i});
    xs.push_back(q.x);
    ys.push_back(q.y);
  }
  auto cdf = [](double x) { return 0.5 * (x + 1.0); };
  CHECK(testutil::ks_statistic(xs, cdf) < testutil::kKs99);
  CHECK(testutil::ks_statistic(ys, cdf) < testutil::kKs99);
}

TEST_CASE("projections of random polygon samples follow the exact cut-area law") {
  for (std::uint64_t k = 0; k < 4; ++k) {
    const auto p = random_ellipse_polygon(5 + static_cast<int>(k), 21, k, false);
    const PolygonSampler s(p);
    const Point2 dir = unit_direction(0.7 + static_cast<double>(k));
    std::vector<double> proj;
    for (std::uint64_t i = 0; i < 20000; ++i) proj.push_back(dot(dir, s(SeededStream{5, i})));
    CHECK(testutil::ks_statistic(proj, [&](double c) { return testutil::cut_fraction(p, dir, c); }) <
          testutil::kKs99);
  }
}

TEST_CASE("triangle counts match areas (chi-square at 99%)") {
  const auto p = random_ellipse_polygon(7, 4, 0, false);
  const PolygonSampler s(p);
  const auto& tri = s.triangulation();
  std::vector<double> counts(tri.triangle_count(), 0.0);
  constexpr int n = 50000;
  for (std::uint64_t i = 0; i < n; ++i) ++counts[tri.locate(SeededStream{8, i}.uniform(0))];
  double chi2 = 0.0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const double expect = n * tri.triangle_area(j) / tri.total_area();
    chi2 += (counts[j] - expect) * (counts[j] - expect) / expect;
  }
  CHECK(chi2 < 15.086);  // 99% quantile, 5 degrees of freedom
}

TEST_CASE("sample matrices use stream index i*N + j") {
  const auto p = regular_polygon(5);
  const PolygonSampler s(p);
  const auto m = s.sample_matrix(4, 99, 3);
  for (std::size_t j = 0; j < 4; ++j) CHECK(m[j] == uniform_in_polygon(p, SeededStream{99, 12 + j}));
  const auto again = sample_matrix(p, 4, 99, 3);
  CHECK(again == m);
  std::set<std::pair<double, double>> seen;
  for (std::uint64_t i = 0; i < 100; ++i) {
    for (const auto& q : s.sample_matrix(3, 99, i)) seen.insert({q.x, q.y});
  }
  CHECK(seen.size() == 300);
}
