#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stochgeo/estimator.hpp"
#include "stochgeo/functionals.hpp"
#include "stochgeo/geom2.hpp"

namespace stochgeo {

/// Moves one vertex a2 (and -a2 in symmetric mode) along the direction of the
/// chord joining its neighbours. Every chord parallel to theta is translated
/// rigidly by t * beta(s), where s is the coordinate along axis() and beta is
/// a hat that is 1 at the moved vertex and 0 on the neighbour chord.
class RSMovement {
 public:
  const ConvexPolygon& base() const { return base_; }
  std::size_t moved_vertex() const { return moved_; }
  std::optional<std::size_t> antipode() const { return antipode_; }
  bool symmetric() const { return antipode_.has_value(); }
  Point2 theta() const { return theta_; }
  // Unit normal to theta; fibre coordinates are (<x, axis>, <x, theta>).
  Point2 axis() const { return perp(theta_); }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  // False for the control movement whose profile is identically zero.
  bool active() const { return active_; }

  double beta(double s) const;

 private:
  friend RSMovement make_movement(const ConvexPolygon&, std::size_t, bool);
  friend RSMovement without_profile(const RSMovement&);

  explicit RSMovement(ConvexPolygon base) : base_(std::move(base)) {}

  ConvexPolygon base_;
  std::size_t moved_ = 0;
  std::optional<std::size_t> antipode_;
  Point2 theta_;
  double s_chord_ = 0.0;   // axis coordinate of the neighbour chord
  double s_vertex_ = 0.0;  // axis coordinate of the moved vertex
  double t_min_ = 0.0;
  double t_max_ = 0.0;
  bool active_ = true;
};

// Throws NoValidDirection when the vertex has no admissible movement
// (triangles, or symmetric polygons with fewer than six vertices) and
// std::invalid_argument when symmetric mode is asked of a non-symmetric
// polygon.
RSMovement make_movement(const ConvexPolygon& p, std::size_t vertex, bool symmetric);

// Same range, beta == 0.
RSMovement without_profile(const RSMovement& m);

// K_t. Throws OutOfRange outside [t_min, t_max].
ConvexPolygon realize_at(const RSMovement& m, double t);

// Index of the vertex at -p[i]; nullopt when absent.
std::optional<std::size_t> antipodal_vertex(const ConvexPolygon& p, std::size_t i);

/// Uniform points of the base body with their fibre coordinates. The image
/// at time t moves each point by t * beta(s) along theta, which is a
/// measure-preserving bijection onto K_t.
struct CoupledSample {
  std::vector<Point2> points;
  std::vector<double> shift;  // beta(s_i)
  Point2 theta;

  std::vector<Point2> image(double t) const;
  void image(double t, std::span<Point2> out) const;
};

// Sample `sample_index` of the base body (stream indices i*N .. i*N+N-1).
// With `mirror`, each point is reflected across the axis line,
// (s, y) -> (s, -y); only meaningful for bases with that reflection symmetry.
CoupledSample couple_sample(const RSMovement& m, std::size_t n_points, std::uint64_t seed,
                            std::uint64_t sample_index, bool mirror = false);

// Per-sample integrand along the grid: |([T_t x]C)°|^{-r} about the origin
// for origin-symmetric C (symmetric movements only), or the Santaló-point
// polar for the simplex.
std::vector<double> sample_convexity_profile(const RSMovement& m, const CoefficientBody& body,
                                             double r, const CoupledSample& sample,
                                             std::span<const double> t_grid,
                                             const QuadratureOptions& opts = {});

// Interior grid points where phi[i] > (phi[i-1] + phi[i+1]) / 2 + slack * max|phi|.
// The grid is assumed uniform.
std::size_t midpoint_violations(std::span<const double> profile, double slack);

// Relative slack used for profiles of this coefficient body.
double convexity_slack(const CoefficientBody& body);

std::vector<double> uniform_t_grid(const RSMovement& m, std::size_t count);

struct SweepResult {
  std::vector<double> t;
  std::vector<EstimatorResult> estimates;  // of |K|^{-r} E phi(t)
  std::size_t violations = 0;              // samples with a midpoint violation
  double slack = 0.0;
  // Per-sample values, values[k][i] for grid point k and sample i.
  std::vector<std::vector<double>> values;
};

// Common-random-numbers sweep: each sample's whole profile is computed by
// one worker from the same coupled points.
SweepResult sweep_W(const RSMovement& m, const CoefficientBody& body, double r,
                    std::span<const double> t_grid, const EstimatorOptions& opts,
                    bool mirror = false);

enum class ReductionMode { symmetric, general };

struct ReductionStep {
  ConvexPolygon polygon;  // before the move
  std::size_t vertex = 0;
  double t_min = 0.0, t_max = 0.0;
  double t_chosen = 0.0;
  EstimatorResult w_start, w_at_min, w_at_max;
  std::size_t vertices_after = 0;
};

struct ReductionResult {
  ConvexPolygon final_polygon;
  std::vector<ReductionStep> trace;
  // Every step's chosen endpoint is at least its starting value, and each
  // step starts at least where the previous one ended, within 3 pooled
  // standard errors.
  bool non_decreasing = true;
};

// Symmetric mode: C origin-symmetric, P symmetric with >= 6 vertices; stops
// at 4 vertices. General mode: C the simplex (Santaló-point polars), P with
// >= 4 vertices; stops at 3. Throws std::invalid_argument otherwise.
ReductionResult reduce_to_extremizer(const ConvexPolygon& p, ReductionMode mode,
                                     const CoefficientBody& body, double r,
                                     const EstimatorOptions& opts);

// "triangle", "parallelogram" (opposite sides parallel within 1e-9), or "other".
std::string classify_shape(const ConvexPolygon& p);

}  // namespace stochgeo
