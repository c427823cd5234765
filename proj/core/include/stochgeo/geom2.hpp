#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace stochgeo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2& operator+=(Point2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Point2& operator-=(Point2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
// Orientation of (b - a, c - a); positive for a counterclockwise turn.
constexpr double cross(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
// Counterclockwise quarter turn.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline Point2 unit_direction(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  static constexpr Mat2 identity() { return {}; }
  static Mat2 rotation(double angle) {
    const double co = std::cos(angle), si = std::sin(angle);
    return {co, -si, si, co};
  }
  static constexpr Mat2 diag(double sx, double sy) { return {sx, 0.0, 0.0, sy}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr Mat2 transpose() const { return {a, c, b, d}; }
  // Caller guarantees det() != 0.
  constexpr Mat2 inverse() const {
    const double k = 1.0 / det();
    return {d * k, -b * k, -c * k, a * k};
  }
  constexpr Point2 operator()(Point2 p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  }
};

/// Oriented line {x : <normal, x> = offset} with a unit normal. The positive
/// side is {<normal, x> >= offset}.
class LineSide {
 public:
  // Normalizes `normal`; throws ZeroDirection for a zero vector.
  LineSide(Point2 normal, double offset);

  static LineSide through_origin(Point2 normal) { return LineSide(normal, 0.0); }

  Point2 normal() const { return normal_; }
  double offset() const { return offset_; }
  double signed_distance(Point2 p) const { return dot(normal_, p) - offset_; }

 private:
  Point2 normal_;
  double offset_;
};

/// A strictly convex polygon in canonical form: counterclockwise, no repeated
/// or collinear vertices, first vertex lexicographically smallest.
///
/// Instances only come out of convex_hull() or from_vertices(), so every
/// ConvexPolygon satisfies these invariants.
class ConvexPolygon {
 public:
  // Validates that `vertices` are in convex position (interior points
  // rejected, boundary points merged) and canonicalizes them. Throws
  // DegeneratePolygon on flat, non-finite, or non-convex input.
  static ConvexPolygon from_vertices(std::span<const Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  // Cyclic access; any integer index is wrapped.
  const Point2& vertex(std::ptrdiff_t i) const;

  // Largest absolute coordinate extent; the reference length for tolerances.
  double scale() const;

 private:
  friend std::optional<ConvexPolygon> convex_hull(std::span<const Point2> points);
  explicit ConvexPolygon(std::vector<Point2> v) : vertices_(std::move(v)) {}

  std::vector<Point2> vertices_;
};

// Canonical hull, or nullopt when the points lie within 1e-12 (relative to
// their extent) of a single line.
std::optional<ConvexPolygon> convex_hull(std::span<const Point2> points);

double area(const ConvexPolygon& p);
Point2 centroid(const ConvexPolygon& p);
double diameter(const ConvexPolygon& p);
double perimeter(const ConvexPolygon& p);

// max_v <theta, v>; throws ZeroDirection for theta == 0.
double support(const ConvexPolygon& p, Point2 theta);

// Outer unit normal of edge i (from vertex i to vertex i + 1).
Point2 edge_normal(const ConvexPolygon& p, std::size_t i);

// Smallest signed distance from the origin to the edge lines, positive when
// the origin is interior.
double origin_depth(const ConvexPolygon& p);

// Polar body about the origin. Throws OriginNotInterior unless the origin is
// more than 1e-12 away from every edge line on the inner side.
ConvexPolygon polar(const ConvexPolygon& p);

bool contains(const ConvexPolygon& p, Point2 q, double slack = 1e-12);
double distance_to(const ConvexPolygon& p, Point2 q);

// Exact Hausdorff distance between convex polygons (vertex-based).
double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q);

// Image under an invertible linear map; throws SingularMap.
ConvexPolygon linear_map(const ConvexPolygon& p, const Mat2& m);
ConvexPolygon translate(const ConvexPolygon& p, Point2 v);
ConvexPolygon scale_about_origin(const ConvexPolygon& p, double factor);

struct SplitPieces {
  std::optional<ConvexPolygon> positive;  // <normal, x> >= offset
  std::optional<ConvexPolygon> negative;  // <normal, x> <= offset
};

// Pieces with area below 1e-14 * area(p) are reported as empty.
SplitPieces split_by_line(const ConvexPolygon& p, const LineSide& line);

// Exact integral of <x, theta> over the polygon.
double first_moment(const ConvexPolygon& p, Point2 theta);

// Integral of x over the polygon (area times centroid).
Point2 moment_vector(const ConvexPolygon& p);

}  // namespace stochgeo
