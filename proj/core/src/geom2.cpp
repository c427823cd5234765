#include "stochgeo/geom2.hpp"

#include <algorithm>
#include <limits>

#include "stochgeo/errors.hpp"

namespace stochgeo {
namespace {

constexpr double kCollinearTol = 1e-12;
constexpr double kFlatTol = 1e-12;
constexpr double kEmptyPieceTol = 1e-14;

double extent(std::span<const Point2> pts) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::max(hi_x - lo_x, hi_y - lo_y);
}

bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Minimal width over edge directions; exact for convex polygons.
double min_width(const std::vector<Point2>& v) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % m];
    const double len = norm(b - a);
    if (len == 0.0) continue;
    double far = 0.0;
    for (const auto& q : v) far = std::max(far, std::abs(cross(a, b, q)) / len);
    best = std::min(best, far);
  }
  return best;
}

double segment_distance(Point2 a, Point2 b, Point2 q) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(q - (a + t * ab));
}

}  // namespace

LineSide::LineSide(Point2 normal, double offset) {
  const double len = norm(normal);
  if (!(len > 0.0)) throw ZeroDirection();
  normal_ = normal / len;
  offset_ = offset / len;
}

const Point2& ConvexPolygon::vertex(std::ptrdiff_t i) const {
  const auto m = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % m) + m) % m)];
}

double ConvexPolygon::scale() const { return extent(vertices_); }

std::optional<ConvexPolygon> convex_hull(std::span<const Point2> points) {
  for (const auto& p : points) {
    if (!is_finite(p)) throw DegeneratePolygon("non-finite coordinate in point set");
  }
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return std::nullopt;

  const double scale = extent(pts);
  if (!(scale > 0.0)) return std::nullopt;
  const double tol = kCollinearTol * scale * scale;

  // Andrew's monotone chain; near-collinear turns are popped.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= tol) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= tol) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);

  // The chain keeps its endpoints unconditionally; merge any collinear
  // triple left at the seams.
  bool changed = true;
  while (changed && hull.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
      const std::size_t m = hull.size();
      const Point2& prev = hull[(i + m - 1) % m];
      const Point2& next = hull[(i + 1) % m];
      if (cross(prev, hull[i], next) <= tol) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (hull.size() < 3) return std::nullopt;

  double twice_area = 0.0, perim = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2 a = hull[i] - hull[0], b = hull[(i + 1) % hull.size()] - hull[0];
    twice_area += cross(a, b);
    perim += norm(hull[(i + 1) % hull.size()] - hull[i]);
  }
  // width >= 2 * area / perimeter; only fall back to the exact width when
  // that cheap bound is inconclusive.
  if (twice_area / perim <= kFlatTol * scale && min_width(hull) <= kFlatTol * scale) {
    return std::nullopt;
  }

  const auto first = std::min_element(hull.begin(), hull.end(), lex_less);
  std::rotate(hull.begin(), first, hull.end());
  return ConvexPolygon(std::move(hull));
}

ConvexPolygon ConvexPolygon::from_vertices(std::span<const Point2> vertices) {
  auto hull = convex_hull(vertices);
  if (!hull) throw DegeneratePolygon("vertices do not span a two-dimensional region");
  const double slack = 1e-9 * hull->scale();
  const std::size_t m = hull->size();
  for (const auto& v : vertices) {
    double depth = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      depth = std::min(depth, -dot(edge_normal(*hull, i), v - (*hull)[i]));
    }
    if (depth > slack) throw DegeneratePolygon("vertex list is not in convex position");
  }
  return *hull;
}

double area(const ConvexPolygon& p) {
  const auto v = p.vertices();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - v[0], v[i + 1] - v[0]);
  return 0.5 * twice;
}

Point2 moment_vector(const ConvexPolygon& p) {
  const auto v = p.vertices();
  // Fan about v[0] keeps the sums well conditioned for translated polygons.
  double twice_area = 0.0;
  Point2 acc{};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Point2 a = v[i] - v[0], b = v[i + 1] - v[0];
    const double c = cross(a, b);
    twice_area += c;
    acc += c * (a + b);
  }
  return (0.5 * twice_area) * v[0] + acc / 6.0;
}

Point2 centroid(const ConvexPolygon& p) {
  const auto v = p.vertices();
  double twice_area = 0.0;
  Point2 acc{};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Point2 a = v[i] - v[0], b = v[i + 1] - v[0];
    const double c = cross(a, b);
    twice_area += c;
    acc += c * (a + b);
  }
  return v[0] + acc / (3.0 * twice_area);
}

double first_moment(const ConvexPolygon& p, Point2 theta) { return dot(moment_vector(p), theta); }

double diameter(const ConvexPolygon& p) {
  const auto v = p.vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, norm(v[i] - v[j]));
  }
  return best;
}

double perimeter(const ConvexPolygon& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += norm(p.vertex(i + 1) - p[i]);
  return total;
}

double support(const ConvexPolygon& p, Point2 theta) {
  if (theta.x == 0.0 && theta.y == 0.0) throw ZeroDirection();
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) best = std::max(best, dot(theta, v));
  return best;
}

Point2 edge_normal(const ConvexPolygon& p, std::size_t i) {
  const Point2 e = p.vertex(static_cast<std::ptrdiff_t>(i) + 1) - p[i];
  return Point2{e.y, -e.x} / norm(e);
}

double origin_depth(const ConvexPolygon& p) {
  double depth = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) depth = std::min(depth, dot(edge_normal(p, i), p[i]));
  return depth;
}

ConvexPolygon polar(const ConvexPolygon& p) {
  std::vector<Point2> dual;
  dual.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2 n = edge_normal(p, i);
    const double h = dot(n, p[i]);
    if (!(h > 1e-12)) throw OriginNotInterior();
    dual.push_back(n / h);
  }
  auto hull = convex_hull(dual);
  if (!hull) throw OriginNotInterior("polar polygon collapsed");
  return *hull;
}

bool contains(const ConvexPolygon& p, Point2 q, double slack) {
  const double tol = slack * std::max(1.0, p.scale());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (dot(edge_normal(p, i), q - p[i]) > tol) return false;
  }
  return true;
}

double distance_to(const ConvexPolygon& p, Point2 q) {
  bool inside = true;
  for (std::size_t i = 0; i < p.size() && inside; ++i) {
    if (cross(p[i], p.vertex(static_cast<std::ptrdiff_t>(i) + 1), q) < 0.0) inside = false;
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    best = std::min(best, segment_distance(p[i], p.vertex(static_cast<std::ptrdiff_t>(i) + 1), q));
  }
  return best;
}

double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q) {
  double d = 0.0;
  for (const auto& v : p.vertices()) d = std::max(d, distance_to(q, v));
  for (const auto& v : q.vertices()) d = std::max(d, distance_to(p, v));
  return d;
}

ConvexPolygon linear_map(const ConvexPolygon& p, const Mat2& m) {
  const double mag = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
  const double det = m.det();
  if (!std::isfinite(det) || !(std::abs(det) > 1e-14 * mag)) throw SingularMap();
  std::vector<Point2> mapped;
  mapped.reserve(p.size());
  for (const auto& v : p.vertices()) mapped.push_back(m(v));
  auto hull = convex_hull(mapped);
  if (!hull) throw SingularMap();
  return *hull;
}

ConvexPolygon translate(const ConvexPolygon& p, Point2 v) {
  std::vector<Point2> moved;
  moved.reserve(p.size());
  for (const auto& q : p.vertices()) moved.push_back(q + v);
  return *convex_hull(moved);
}

ConvexPolygon scale_about_origin(const ConvexPolygon& p, double factor) {
  return linear_map(p, Mat2::diag(factor, factor));
}

SplitPieces split_by_line(const ConvexPolygon& p, const LineSide& line) {
  std::vector<Point2> pos, neg;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 cur = p[i];
    const Point2 next = p.vertex(static_cast<std::ptrdiff_t>(i) + 1);
    const double dc = line.signed_distance(cur);
    const double dn = line.signed_distance(next);
    if (dc >= 0.0) pos.push_back(cur);
    if (dc <= 0.0) neg.push_back(cur);
    if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
      const Point2 cut = cur + (dc / (dc - dn)) * (next - cur);
      pos.push_back(cut);
      neg.push_back(cut);
    }
  }
  const double floor_area = kEmptyPieceTol * area(p);
  auto finish = [&](const std::vector<Point2>& pts) -> std::optional<ConvexPolygon> {
    auto hull = convex_hull(pts);
    if (!hull || area(*hull) < floor_area) return std::nullopt;
    return hull;
  };
  return {finish(pos), finish(neg)};
}

}  // namespace stochgeo
