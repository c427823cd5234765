#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stochgeo/estimator.hpp"
#include "stochgeo/geom2.hpp"

namespace stochgeo {

/// The coefficient body C in R^N whose image [x]C under the point matrix
/// defines the random set.
class CoefficientBody {
 public:
  enum class Kind { cross_polytope, lq_ball, simplex };

  static CoefficientBody cross_polytope(int n);
  static CoefficientBody simplex(int n);
  // scale * B_q^N; by default scale = N^{-1/p} with 1/p + 1/q = 1, so that
  // [x]C is the empirical p-centroid body.
  static CoefficientBody lq_ball(int n, double q, std::optional<double> scale = std::nullopt);
  // Same body parameterized by the moment exponent p in [1, inf].
  static CoefficientBody for_moment(int n, double p);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  double q() const { return q_; }
  // Conjugate exponent of q; infinity when q == 1.
  double p() const;
  double scale() const { return scale_; }
  bool origin_symmetric() const { return kind_ != Kind::simplex; }

  // h_C(a) for a coefficient vector a = [x]^T theta.
  double support(std::span<const double> a) const;

  // "cross", "simplex", "lq:Q".
  std::string describe() const;
  // Parses the --coeff syntax; throws std::invalid_argument.
  static CoefficientBody parse(const std::string& text, int n);

 private:
  CoefficientBody(Kind kind, int n, double q, double scale)
      : kind_(kind), n_(n), q_(q), scale_(scale) {}

  Kind kind_;
  int n_;
  double q_;
  double scale_;
};

struct CentroidBodyTable;

/// A queryable support function h(theta) with the breakpoints where it may
/// fail to be smooth. Immutable after construction.
class SupportEvaluator {
 public:
  static SupportEvaluator of_polygon(ConvexPolygon polygon);
  static SupportEvaluator of_composition(std::vector<Point2> points, CoefficientBody body);

  // h(theta) for any non-zero theta (positively homogeneous).
  double operator()(Point2 theta) const;
  // Angles in [0, 2 pi), sorted.
  std::vector<double> breakpoints() const;
  // pi / sqrt(det S) when h(u)^2 = u^T S u, i.e. for lq:2 compositions.
  std::optional<double> ellipse_polar_area() const;

 private:
  friend SupportEvaluator centroid_body_exact(const ConvexPolygon&, double, int);

  struct PolygonBacking {
    ConvexPolygon polygon;
  };
  struct CompositionBacking {
    std::vector<Point2> points;
    CoefficientBody body;
    std::optional<ConvexPolygon> hull;  // for cross_polytope and simplex
    double gram_xx = 0.0, gram_xy = 0.0, gram_yy = 0.0;
  };
  struct CentroidBacking {
    std::shared_ptr<const CentroidBodyTable> table;
  };
  using Backing = std::variant<PolygonBacking, CompositionBacking, CentroidBacking>;

  explicit SupportEvaluator(Backing b) : backing_(std::move(b)) {}

  Backing backing_;
};

// |K°| = (1/2) \int_0^{2pi} h(theta)^{-2} d theta by composite Gauss-Legendre,
// with panel boundaries aligned to the evaluator's breakpoints. Throws
// NonpositiveSupport when h <= 1e-14 at any node.
double polar_volume_quadrature(const SupportEvaluator& h, const QuadratureOptions& opts = {});

// max over a theta grid (plus both breakpoint sets) of |h1 - h2|; the
// Hausdorff distance for convex bodies given by support functions.
double hausdorff_support(const SupportEvaluator& h1, const SupportEvaluator& h2, int nodes = 4096);

struct SantaloResult {
  Point2 point;
  double polar_area = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Exact |(P - z)°| from the polygon's edge lines; throws OriginNotInterior
// when z is not strictly interior.
double polar_area_about(const ConvexPolygon& p, Point2 z);

// Minimizer of z -> |(P - z)°| by damped Newton with Armijo backtracking on
// the exact objective, starting from the centroid.
SantaloResult santalo_point(const ConvexPolygon& p);

enum class MahlerCenter { origin, santalo };
double mahler_product(const ConvexPolygon& p, MahlerCenter center = MahlerCenter::origin);

// Support function of the p-centroid body Z_p P, p in [1, inf). Values on a
// grid of theta_nodes angles are precomputed; other directions are
// evaluated exactly (p = 1) or by degree >= 20 triangle quadrature (p > 1).
SupportEvaluator centroid_body_exact(const ConvexPolygon& p, double moment, int theta_nodes = 360);

// |(Z_p P)°| for origin-interior P.
double polar_centroid_volume(const ConvexPolygon& p, double moment, const QuadratureOptions& opts = {});

struct Degenerate {};
using RandomBody = std::variant<Degenerate, ConvexPolygon, SupportEvaluator>;

// [x]C: exact polygon for cross_polytope and simplex, support composition
// for lq_ball; Degenerate when flat.
RandomBody random_polytope(std::span<const Point2> points, const CoefficientBody& body);

// |([x]C)°| about the origin, or nullopt for flat or non-origin-interior bodies.
std::optional<double> origin_polar_area(const RandomBody& body, const QuadratureOptions& opts = {});

// Per-sample integrands. Degenerate configurations contribute 0.
double w_integrand(std::span<const Point2> points, const CoefficientBody& body, double r,
                   const QuadratureOptions& opts = {});
double w_santalo_integrand(std::span<const Point2> points, double r);

// Per-sample values of each estimator, index i computed from stream indices
// i*N .. i*N+N-1 of the seed.
std::vector<double> w_sample_values(const ConvexPolygon& k, const CoefficientBody& body, double r,
                                    const EstimatorOptions& opts);
std::vector<double> w_santalo_sample_values(const ConvexPolygon& k, int n_points, double r,
                                            const EstimatorOptions& opts);
std::vector<double> sylvester_sample_values(const ConvexPolygon& k, int n_points,
                                            const EstimatorOptions& opts);
std::vector<double> polar_centroid_sample_values(const ConvexPolygon& k, double moment,
                                                 int n_points, double r,
                                                 const EstimatorOptions& opts);

// Monte Carlo mean of |K|^{-r} |([X]C)°|^{-r}; K origin-symmetric, C
// origin-symmetric, r >= 1.
EstimatorResult estimate_W(const ConvexPolygon& k, const CoefficientBody& body, double r,
                           const EstimatorOptions& opts);
// Monte Carlo mean of |K|^{-r} |(conv X - s)°|^{-r} about each hull's
// Santaló point; N >= 3.
EstimatorResult estimate_W_santalo(const ConvexPolygon& k, int n_points, double r,
                                   const EstimatorOptions& opts);
// Mean of |conv{X_1..X_N}| / |K|.
EstimatorResult estimate_sylvester(const ConvexPolygon& k, int n_points,
                                   const EstimatorOptions& opts);
// Mean of |Z°_{p,N}(K)|^{-r}.
EstimatorResult empirical_polar_centroid_volume(const ConvexPolygon& k, double moment,
                                                int n_points, double r,
                                                const EstimatorOptions& opts);

}  // namespace stochgeo
