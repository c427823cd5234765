#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <variant>

#include "stochgeo/bodies.hpp"
#include "stochgeo/errors.hpp"
#include "stochgeo/functionals.hpp"
#include "stochgeo/sampling.hpp"

using namespace stochgeo;

namespace {

constexpr double kPi = std::numbers::pi;
const double kCentroidPolarSquare = 4.0 * kPi / std::sqrt(3.0) + 6.0;

ConvexPolygon square4() { return realize(BodySpec::parse("square:4")); }

// (1/|P|) \int_P |<x, u>|^p by a fine midpoint rule on the bounding box.
double brute_centroid_support(const ConvexPolygon& p, Point2 u, double moment, int grid) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& v : p.vertices()) {
    x0 = std::min(x0, v.x), x1 = std::max(x1, v.x), y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
  }
  const double hx = (x1 - x0) / grid, hy = (y1 - y0) / grid;
  double acc = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const Point2 q{x0 + (i + 0.5) * hx, y0 + (j + 0.5) * hy};
      if (contains(p, q, 0.0)) acc += std::pow(std::abs(dot(q, u)), moment);
    }
  }
  return std::pow(acc * hx * hy / area(p), 1.0 / moment);
}

EstimatorOptions opts(std::size_t samples, std::uint64_t seed, unsigned workers = 1) {
  EstimatorOptions o;
  o.samples = samples;
  o.seed = seed;
  o.workers = workers;
  return o;
}

}  // namespace

TEST_CASE("coefficient bodies") {
  const auto cross = CoefficientBody::cross_polytope(3);
  CHECK(cross.origin_symmetric());
  CHECK(std::isinf(cross.p()));
  const double a[3] = {0.5, -2.0, 1.0};
  CHECK(cross.support(a) == 2.0);
  CHECK(CoefficientBody::simplex(3).support(a) == 1.0);
  CHECK_FALSE(CoefficientBody::simplex(3).origin_symmetric());

  const auto l2 = CoefficientBody::lq_ball(3, 2.0);
  CHECK(l2.p() == 2.0);
  CHECK(l2.scale() == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(l2.support(a) == doctest::Approx(std::sqrt(5.25 / 3.0)));
  const auto linf = CoefficientBody::lq_ball(3, std::numeric_limits<double>::infinity());
  CHECK(linf.p() == 1.0);
  CHECK(linf.support(a) == doctest::Approx(3.5 / 3.0));
  const auto l1 = CoefficientBody::lq_ball(3, 1.0);
  CHECK(std::isinf(l1.p()));
  CHECK(l1.scale() == 1.0);
  CHECK(l1.support(a) == 2.0);
  const auto l3 = CoefficientBody::lq_ball(3, 3.0, 2.0);
  CHECK(l3.support(a) == doctest::Approx(2.0 * std::pow(std::pow(0.5, 1.5) + std::pow(2.0, 1.5) + 1.0, 1.0 / 1.5)));

  CHECK(CoefficientBody::for_moment(4, 1.0).q() == std::numeric_limits<double>::infinity());
  CHECK(CoefficientBody::for_moment(4, 2.0).q() == 2.0);
  CHECK(CoefficientBody::for_moment(4, std::numeric_limits<double>::infinity()).q() == 1.0);

  CHECK(CoefficientBody::parse("cross", 3).describe() == "cross");
  CHECK(CoefficientBody::parse("simplex", 3).describe() == "simplex");
  CHECK(CoefficientBody::parse("lq:2", 3).describe() == "lq:2");
  CHECK(CoefficientBody::parse("lq:2.5", 3).describe() == "lq:2.5");
  CHECK(CoefficientBody::parse("lq:inf", 3).describe() == "lq:inf");
  for (const char* bad : {"", "lq:", "lq:x", "lq:0.5", "ball", "lq:2x"}) {
    CHECK_THROWS_AS(CoefficientBody::parse(bad, 3), std::invalid_argument);
  }
  CHECK_THROWS_AS(CoefficientBody::cross_polytope(1), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientBody::lq_ball(3, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("polar volume quadrature on simple bodies") {
  CHECK(polar_volume_quadrature(SupportEvaluator::of_polygon(square4())) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(polar_volume_quadrature(SupportEvaluator::of_polygon(realize(BodySpec::parse("diamond:2")))) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(polar_volume_quadrature(SupportEvaluator::of_polygon(translate(square4(), {1.5, 0}))),
                  NonpositiveSupport);
}

TEST_CASE("property: quadrature matches the exact polar area") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const bool sym = i % 2 == 0;
    const int k = sym ? 2 * (2 + static_cast<int>(i % 5)) : 3 + static_cast<int>(i % 12);
    const auto p = random_ellipse_polygon(k, 31, i, sym);
    const double exact = area(polar(p));
    const double quad = polar_volume_quadrature(SupportEvaluator::of_polygon(p));
    CHECK(std::abs(quad - exact) / exact <= 1e-6);
  }
}

TEST_CASE("random polytopes from coefficient bodies") {
  const std::vector<Point2> e{{1, 0}, {0, 1}};
  const auto diamond = random_polytope(e, CoefficientBody::cross_polytope(2));
  REQUIRE(std::holds_alternative<ConvexPolygon>(diamond));
  CHECK(hausdorff(std::get<ConvexPolygon>(diamond), realize(BodySpec::parse("diamond:2"))) < 1e-15);

  const std::vector<Point2> tri{{0, 0}, {1, 0}, {0, 2}};
  const auto t = random_polytope(tri, CoefficientBody::simplex(3));
  REQUIRE(std::holds_alternative<ConvexPolygon>(t));
  CHECK(area(std::get<ConvexPolygon>(t)) == doctest::Approx(1.0));

  const std::vector<Point2> pts{{1, 0.2}, {-0.3, 0.8}, {0.5, -0.6}, {0.1, 0.1}};
  const auto l2 = random_polytope(pts, CoefficientBody::lq_ball(4, 2.0));
  REQUIRE(std::holds_alternative<SupportEvaluator>(l2));
  for (double ang = 0.1; ang < 6.2; ang += 0.37) {
    const Point2 u = unit_direction(ang);
    double s = 0.0;
    for (const auto& x : pts) s += dot(x, u) * dot(x, u);
    CHECK(std::get<SupportEvaluator>(l2)(u) == doctest::Approx(std::sqrt(s / 4.0)).epsilon(1e-14));
  }
  const auto l3 = SupportEvaluator::of_composition(pts, CoefficientBody::lq_ball(4, 3.0));
  const Point2 u = unit_direction(0.9);
  double s = 0.0;
  for (const auto& x : pts) s += std::pow(std::abs(dot(x, u)), 1.5);
  CHECK(l3(u) == doctest::Approx(std::pow(4.0, -1.0 / 1.5) * std::pow(s, 1.0 / 1.5)).epsilon(1e-13));
  CHECK(l3(3.0 * u) == doctest::Approx(3.0 * l3(u)));
  CHECK_THROWS_AS(l3(Point2{0, 0}), ZeroDirection);

  const std::vector<Point2> flat{{1, 1}, {2, 2}, {-1, -1}};
  CHECK(std::holds_alternative<Degenerate>(random_polytope(flat, CoefficientBody::cross_polytope(3))));
  CHECK(std::holds_alternative<Degenerate>(random_polytope(flat, CoefficientBody::lq_ball(3, 2.0))));
  CHECK(std::holds_alternative<Degenerate>(random_polytope(flat, CoefficientBody::simplex(3))));
  CHECK_FALSE(origin_polar_area(Degenerate{}));
  CHECK_THROWS_AS(random_polytope(flat, CoefficientBody::cross_polytope(4)), std::invalid_argument);
}

TEST_CASE("zonotope composition quadrature agrees with the exact zonotope polygon") {
  // lq:inf composes to N^{-1} sum of segments [-x_i, x_i].
  const std::vector<Point2> pts{{1, 0.2}, {-0.3, 0.8}, {0.5, -0.6}};
  std::vector<Point2> corners;
  for (int mask = 0; mask < 8; ++mask) {
    Point2 c{};
    for (int i = 0; i < 3; ++i) c += ((mask >> i) & 1 ? 1.0 : -1.0) / 3.0 * pts[static_cast<std::size_t>(i)];
    corners.push_back(c);
  }
  const auto zono = *convex_hull(corners);
  const auto h = SupportEvaluator::of_composition(pts, CoefficientBody::lq_ball(3, std::numeric_limits<double>::infinity()));
  CHECK(polar_volume_quadrature(h) == doctest::Approx(area(polar(zono))).epsilon(1e-12));
}

TEST_CASE("centroid bodies of the square") {
  const auto sq = square4();
  const auto z1 = centroid_body_exact(sq, 1.0);
  CHECK(z1({1, 0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(z1({0, 2}) == doctest::Approx(1.0).epsilon(1e-15));
  const auto z2 = centroid_body_exact(sq, 2.0);
  for (double ang = 0.0; ang < 6.3; ang += 0.1) {
    CHECK(std::abs(z2(unit_direction(ang)) - 1.0 / std::sqrt(3.0)) <= 1e-9);
  }
  CHECK(polar_centroid_volume(sq, 1.0) == doctest::Approx(kCentroidPolarSquare).epsilon(1e-6));
  CHECK(polar_centroid_volume(sq, 1.0) * area(sq) ==
        doctest::Approx(16.0 * kPi / std::sqrt(3.0) + 24.0).epsilon(1e-6));
  CHECK(polar_centroid_volume(sq, 2.0) == doctest::Approx(3.0 * kPi).epsilon(1e-9));
  CHECK_THROWS_AS(centroid_body_exact(sq, 0.5), std::invalid_argument);
}

TEST_CASE("centroid body supports match a brute-force area integral") {
  const auto p = random_ellipse_polygon(6, 3, 5, false);
  for (double moment : {1.0, 2.5}) {
    const auto z = centroid_body_exact(p, moment);
    for (double ang : {0.3, 1.9, 4.4}) {
      const Point2 u = unit_direction(ang);
      CHECK(z(u) == doctest::Approx(brute_centroid_support(p, u, moment, 1500)).epsilon(2e-5));
    }
  }
}

TEST_CASE("grid lookups agree with direct evaluation") {
  const auto p = random_ellipse_polygon(8, 3, 9, true);
  const auto grid = centroid_body_exact(p, 1.0, 360);
  const auto direct = centroid_body_exact(p, 1.0, 0);
  for (int k = 0; k < 360; k += 7) {
    const Point2 u = unit_direction(2.0 * kPi * k / 360);
    CHECK(grid(u) == doctest::Approx(direct(u)).epsilon(1e-14));
  }
}

TEST_CASE("property: centroid bodies are equivariant under det-1 maps") {
  const auto p = random_ellipse_polygon(6, 8, 1, true);
  const Mat2 t{1.3, 0.4, 0.2, (1.0 + 0.4 * 0.2) / 1.3};
  REQUIRE(t.det() == doctest::Approx(1.0));
  for (double moment : {1.0, 2.0, 3.0}) {
    const auto zk = centroid_body_exact(p, moment);
    const auto ztk = centroid_body_exact(linear_map(p, t), moment);
    for (double ang = 0.05; ang < 6.28; ang += 0.61) {
      const Point2 u = unit_direction(ang);
      CHECK(std::abs(ztk(u) - zk(t.transpose()(u))) <= 1e-8);
    }
  }
}

TEST_CASE("support-function Hausdorff distance") {
  const auto sq = square4();
  const auto big = scale_about_origin(sq, 1.5);
  CHECK(hausdorff_support(SupportEvaluator::of_polygon(sq), SupportEvaluator::of_polygon(big)) ==
        doctest::Approx(hausdorff(sq, big)).epsilon(1e-6));
}

TEST_CASE("Mahler products") {
  CHECK(std::abs(mahler_product(square4()) - 8.0) <= 1e-12);
  CHECK(std::abs(mahler_product(regular_polygon(6)) - 9.0) <= 1e-9);
  const auto tri = realize(BodySpec::parse("triangle:1"));
  CHECK(mahler_product(tri, MahlerCenter::santalo) == doctest::Approx(6.75).epsilon(1e-6));
  CHECK(mahler_product(translate(tri, {0.1, -0.05}), MahlerCenter::santalo) ==
        doctest::Approx(6.75).epsilon(1e-6));
  CHECK_THROWS_AS(mahler_product(translate(square4(), {2, 0})), OriginNotInterior);
}

TEST_CASE("Santalo points") {
  const auto tri = realize(BodySpec::parse("triangle:1"));
  const auto s = santalo_point(tri);
  CHECK(s.converged);
  CHECK(norm(s.point) <= 1e-7);
  CHECK(s.polar_area * area(tri) == doctest::Approx(6.75).epsilon(1e-6));

  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto p = random_ellipse_polygon(2 * (2 + static_cast<int>(i % 4)), 12, i, true);
    CHECK(norm(santalo_point(p).point) <= 1e-8);
  }

  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto p = random_ellipse_polygon(3 + static_cast<int>(i % 8), 14, i, false);
    const Point2 v{0.3 * std::cos(1.0 * i), -0.2 + 0.01 * i};
    const auto a = santalo_point(p), b = santalo_point(translate(p, v));
    CHECK(norm(b.point - (a.point + v)) <= 1e-7);
    CHECK(b.polar_area == doctest::Approx(a.polar_area).epsilon(1e-10));
  }
}

TEST_CASE("Santalo solver reaches a stationary point") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto p = random_ellipse_polygon(3 + static_cast<int>(i % 10), 15, i, false);
    const auto s = santalo_point(p);
    CHECK(s.converged);
    CHECK(s.iterations < 200);
    CHECK(s.gradient_norm <= 1e-9);
    const double h = 1e-6 * diameter(p);
    const double gx = (polar_area_about(p, s.point + Point2{h, 0}) - polar_area_about(p, s.point - Point2{h, 0})) / (2 * h);
    const double gy = (polar_area_about(p, s.point + Point2{0, h}) - polar_area_about(p, s.point - Point2{0, h})) / (2 * h);
    CHECK(std::hypot(gx, gy) * diameter(p) <= 1e-7 * s.polar_area);
  }
}

TEST_CASE("property: the Santalo point minimizes the polar area") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto p = random_ellipse_polygon(3 + static_cast<int>(i % 9), 16, i, false);
    const auto s = santalo_point(p);
    const PolygonSampler sampler(p);
    for (std::uint64_t j = 0; j < 20; ++j) {
      const Point2 z = sampler(SeededStream{17, i * 20 + j});
      CHECK(s.polar_area <= polar_area_about(p, z) + 1e-9 * s.polar_area);
    }
    CHECK(polar_area_about(p, s.point) == doctest::Approx(area(polar(translate(p, -s.point)))).epsilon(1e-12));
  }
}

TEST_CASE("property: polar area is midpoint convex in the center") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto p = random_ellipse_polygon(3 + static_cast<int>(i % 9), 18, i, false);
    const PolygonSampler sampler(p);
    const Point2 a = sampler(SeededStream{19, 2 * i}), b = sampler(SeededStream{19, 2 * i + 1});
    const double fa = polar_area_about(p, a), fb = polar_area_about(p, b);
    const double fm = polar_area_about(p, 0.5 * (a + b));
    CHECK(fm <= 0.5 * (fa + fb) + 1e-9 * std::max(fa, fb));
  }
  CHECK_THROWS_AS(polar_area_about(square4(), {1, 0}), OriginNotInterior);
}

TEST_CASE("W estimator preconditions") {
  const auto sq = square4();
  const auto tri = realize(BodySpec::parse("triangle:4"));
  const auto o = opts(10, 1);
  CHECK_THROWS_AS(estimate_W(tri, CoefficientBody::cross_polytope(3), 1.0, o), std::invalid_argument);
  CHECK_THROWS_AS(estimate_W(sq, CoefficientBody::simplex(3), 1.0, o), std::invalid_argument);
  CHECK_THROWS_AS(estimate_W(sq, CoefficientBody::cross_polytope(3), 0.5, o), std::invalid_argument);
  CHECK_THROWS_AS(estimate_W_santalo(sq, 2, 1.0, o), std::invalid_argument);
  CHECK_THROWS_AS(estimate_sylvester(sq, 2, o), std::invalid_argument);
  CHECK_THROWS_AS(estimate_W(sq, CoefficientBody::cross_polytope(3), 1.0, opts(0, 1)), std::invalid_argument);
}

TEST_CASE("property: cross-polytope samples are bounded by the body's own polar") {
  for (const char* d : {"diamond:2", "square:4", "kgon:6:4"}) {
    const auto k = realize(BodySpec::parse(d));
    const double bound = std::pow(area(polar(k)), -1.0);
    for (int n : {2, 3, 5}) {
      const auto values = w_sample_values(k, CoefficientBody::cross_polytope(n), 1.0, opts(2000, 4));
      for (double v : values) CHECK(v * area(k) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("property: W integrands are exactly invariant under det-1 maps of the sample") {
  const auto k = realize(BodySpec::parse("kgon:6:4"));
  const Mat2 t{2.0, 0.5, 0.0, 0.5};
  const PolygonSampler sampler(k);
  for (const char* c : {"cross", "lq:2", "lq:inf"}) {
    const auto body = CoefficientBody::parse(c, 4);
    for (std::uint64_t i = 0; i < 50; ++i) {
      auto pts = sampler.sample_matrix(4, 6, i);
      const double a = w_integrand(pts, body, 1.0);
      for (auto& x : pts) x = t(x);
      CHECK(w_integrand(pts, body, 1.0) == doctest::Approx(a).epsilon(1e-9));
    }
  }
}

TEST_CASE("W over a linear image agrees statistically") {
  const auto k = realize(BodySpec::parse("kgon:6:4"));
  const auto tk = linear_map(k, Mat2{2.0, 0.5, 0.0, 0.5});
  const auto a = estimate_W(k, CoefficientBody::cross_polytope(3), 1.0, opts(20000, 7));
  const auto b = estimate_W(tk, CoefficientBody::cross_polytope(3), 1.0, opts(20000, 7));
  CHECK(std::abs(a.mean - b.mean) <= 3.0 * std::hypot(a.std_error, b.std_error));
}

TEST_CASE("Santalo functional is translation invariant for a fixed seed") {
  const auto k = realize(BodySpec::parse("randpoly:6:4:2"));
  const auto a = w_santalo_sample_values(k, 4, 1.0, opts(500, 3));
  const auto b = w_santalo_sample_values(translate(k, {0.2, -0.1}), 4, 1.0, opts(500, 3));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-9));
}

TEST_CASE("square versus hexagon and triangle versus square dominance") {
  const auto sq = square4();
  const auto hex = realize(BodySpec::parse("kgon:6:4"));
  const auto tri = realize(BodySpec::parse("triangle:4"));
  const auto o = opts(20000, 11);
  const auto w = compare_paired(w_sample_values(hex, CoefficientBody::cross_polytope(3), 1.0, o),
                                w_sample_values(sq, CoefficientBody::cross_polytope(3), 1.0, o), 11);
  CHECK(w.dominance_holds);
  const auto s = compare_paired(w_santalo_sample_values(sq, 3, 1.0, o),
                                w_santalo_sample_values(tri, 3, 1.0, o), 11);
  CHECK(s.dominance_holds);
  const auto same = compare_paired(w_sample_values(sq, CoefficientBody::cross_polytope(3), 1.0, o),
                                   w_sample_values(sq, CoefficientBody::cross_polytope(3), 1.0, o), 11);
  CHECK(same.identical);
}

TEST_CASE("Sylvester functional") {
  const auto sq = realize(BodySpec::parse("square:1"));
  const auto m = estimate_sylvester(sq, 3, opts(200000, 5));
  CHECK(std::abs(m.mean - 11.0 / 144.0) <= 3.0 * m.std_error);
  const auto t = estimate_sylvester(realize(BodySpec::parse("triangle:1")), 3, opts(200000, 5));
  CHECK(std::abs(t.mean - 1.0 / 12.0) <= 3.0 * t.std_error);
  for (double v : sylvester_sample_values(sq, 6, opts(1000, 2))) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("empirical centroid bodies at p = inf reduce to the cross-polytope") {
  const auto k = realize(BodySpec::parse("kgon:6:4"));
  const double inf = std::numeric_limits<double>::infinity();
  const auto a = polar_centroid_sample_values(k, inf, 4, 1.0, opts(200, 3));
  const auto b = w_sample_values(k, CoefficientBody::cross_polytope(4), 1.0, opts(200, 3));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i] * area(k)).epsilon(1e-9));
}

TEST_CASE("estimators are identical for any worker count") {
  const auto k = realize(BodySpec::parse("kgon:6:4"));
  for (unsigned w : {2u, 3u, 5u}) {
    const auto a = estimate_W(k, CoefficientBody::lq_ball(3, 2.0), 1.0, opts(997, 8, 1));
    const auto b = estimate_W(k, CoefficientBody::lq_ball(3, 2.0), 1.0, opts(997, 8, w));
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
  }
}

TEST_CASE("lq:2 compositions have a closed-form polar area") {
  const std::vector<Point2> pts{{1, 0.2}, {-0.3, 0.8}, {0.5, -0.6}};
  const auto h = SupportEvaluator::of_composition(pts, CoefficientBody::lq_ball(3, 2.0));
  REQUIRE(h.ellipse_polar_area());
  CHECK(*h.ellipse_polar_area() == doctest::Approx(polar_volume_quadrature(h)).epsilon(1e-12));
  CHECK_FALSE(SupportEvaluator::of_composition(pts, CoefficientBody::lq_ball(3, 3.0)).ellipse_polar_area());
  CHECK_FALSE(SupportEvaluator::of_composition(pts, CoefficientBody::cross_polytope(3)).ellipse_polar_area());
  CHECK_FALSE(SupportEvaluator::of_polygon(square4()).ellipse_polar_area());

  // Two points: the ellipse has area pi * |x1 x x2| / 2 under the N^{-1/2}
  // scale, so the polar area is 2 pi / |x1 x x2| even when nearly flat.
  const std::vector<Point2> thin{{1.0, 0.0}, {1.0, 1e-7}};
  const auto e = random_polytope(thin, CoefficientBody::lq_ball(2, 2.0));
  REQUIRE(std::holds_alternative<SupportEvaluator>(e));
  CHECK(*origin_polar_area(e) == doctest::Approx(2.0 * kPi / 1e-7).epsilon(1e-12));
}
