#include "stochgeo/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "stochgeo/bodies.hpp"
#include "stochgeo/errors.hpp"
#include "stochgeo/parallel.hpp"
#include "stochgeo/quadrature.hpp"
#include "stochgeo/sampling.hpp"

namespace stochgeo {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSupportFloor = 1e-14;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double angle_of(Point2 v) { return wrap_angle(std::atan2(v.y, v.x)); }

std::vector<double> normal_angles(const ConvexPolygon& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(angle_of(edge_normal(p, i)));
  return out;
}

void append_zero_crossings(std::vector<double>& out, Point2 v) {
  if (v.x == 0.0 && v.y == 0.0) return;
  const double a = angle_of(perp(v));
  out.push_back(a);
  out.push_back(wrap_angle(a + std::numbers::pi));
}

void sort_unique_angles(std::vector<double>& a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end(), [](double x, double y) { return y - x < 1e-14; }),
          a.end());
  if (a.size() > 1 && a.front() + kTwoPi - a.back() < 1e-14) a.pop_back();
}

// Uniform composite rule on [0, 2 pi): unit directions and weights.
struct CircleRule {
  std::vector<Point2> dirs;
  std::vector<double> weights;
};

std::shared_ptr<const CircleRule> uniform_circle_rule(int panels, int order) {
  static std::mutex guard;
  static std::map<std::pair<int, int>, std::shared_ptr<const CircleRule>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[{panels, order}];
  if (!slot) {
    const GaussRule g = gauss_legendre(order);
    auto rule = std::make_shared<CircleRule>();
    const double width = kTwoPi / panels;
    for (int k = 0; k < panels; ++k) {
      for (std::size_t j = 0; j < g.nodes.size(); ++j) {
        rule->dirs.push_back(unit_direction(width * (k + 0.5 * (g.nodes[j] + 1.0))));
        rule->weights.push_back(0.5 * width * g.weights[j]);
      }
    }
    slot = std::move(rule);
  }
  return slot;
}

double inverse_square_term(double h) {
  if (!(h > kSupportFloor)) throw NonpositiveSupport();
  return 1.0 / (h * h);
}

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientBody

CoefficientBody CoefficientBody::cross_polytope(int n) {
  if (n < 2) throw std::invalid_argument("coefficient body needs N >= 2");
  return {Kind::cross_polytope, n, 1.0, 1.0};
}

CoefficientBody CoefficientBody::simplex(int n) {
  if (n < 2) throw std::invalid_argument("coefficient body needs N >= 2");
  return {Kind::simplex, n, std::numeric_limits<double>::quiet_NaN(), 1.0};
}

CoefficientBody CoefficientBody::lq_ball(int n, double q, std::optional<double> scale) {
  if (n < 2) throw std::invalid_argument("coefficient body needs N >= 2");
  if (!(q >= 1.0)) throw std::invalid_argument("lq ball needs q in [1, inf]");
  CoefficientBody c{Kind::lq_ball, n, q, 1.0};
  if (scale) {
    if (!(*scale > 0.0)) throw std::invalid_argument("lq ball scale must be positive");
    c.scale_ = *scale;
  } else {
    const double p = c.p();
    c.scale_ = std::isinf(p) ? 1.0 : std::pow(static_cast<double>(n), -1.0 / p);
  }
  return c;
}

CoefficientBody CoefficientBody::for_moment(int n, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("moment exponent must lie in [1, inf]");
  const double q = std::isinf(p) ? 1.0 : (p == 1.0 ? kInf : p / (p - 1.0));
  return lq_ball(n, q);
}

double CoefficientBody::p() const {
  if (kind_ == Kind::cross_polytope || q_ == 1.0) return kInf;
  if (std::isinf(q_)) return 1.0;
  return q_ / (q_ - 1.0);
}

double CoefficientBody::support(std::span<const double> a) const {
  switch (kind_) {
    case Kind::cross_polytope: {
      double m = 0.0;
      for (double v : a) m = std::max(m, std::abs(v));
      return m;
    }
    case Kind::simplex: {
      double m = -kInf;
      for (double v : a) m = std::max(m, v);
      return m;
    }
    case Kind::lq_ball: {
      const double p = this->p();
      double m = 0.0;
      for (double v : a) m = std::max(m, std::abs(v));
      if (std::isinf(p) || m == 0.0) return scale_ * m;
      if (p == 1.0) {
        double s = 0.0;
        for (double v : a) s += std::abs(v);
        return scale_ * s;
      }
      double s = 0.0;
      for (double v : a) s += std::pow(std::abs(v) / m, p);
      return scale_ * m * std::pow(s, 1.0 / p);
    }
  }
  return 0.0;
}

std::string CoefficientBody::describe() const {
  switch (kind_) {
    case Kind::cross_polytope: return "cross";
    case Kind::simplex: return "simplex";
    case Kind::lq_ball: {
      if (std::isinf(q_)) return "lq:inf";
      std::string s = std::to_string(q_);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return "lq:" + s;
    }
  }
  return "unknown";
}

CoefficientBody CoefficientBody::parse(const std::string& text, int n) {
  if (text == "cross") return cross_polytope(n);
  if (text == "simplex") return simplex(n);
  if (text.rfind("lq:", 0) == 0) {
    const std::string qs = text.substr(3);
    if (qs == "inf") return lq_ball(n, kInf);
    std::size_t used = 0;
    double q = 0.0;
    try {
      q = std::stod(qs, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != qs.size() || qs.empty()) throw std::invalid_argument("invalid lq exponent '" + qs + "'");
    return lq_ball(n, q);
  }
  throw std::invalid_argument("unknown coefficient body '" + text + "'");
}

// ---------------------------------------------------------------------------
// Centroid bodies

struct CentroidBodyTable {
  ConvexPolygon polygon;
  double moment;
  double body_area;
  int grid_nodes;
  std::vector<double> grid;
  TriangleRule rule;

  double exact_unit(Point2 u) const {
    const SplitPieces pieces = split_by_line(polygon, LineSide::through_origin(u));
    if (moment == 1.0) {
      double acc = 0.0;
      if (pieces.positive) acc += first_moment(*pieces.positive, u);
      if (pieces.negative) acc -= first_moment(*pieces.negative, u);
      return acc / body_area;
    }
    double acc = 0.0;
    auto integrate_piece = [&](const ConvexPolygon& piece, double sign) {
      const Point2 apex = piece[0];
      for (std::size_t i = 1; i + 1 < piece.size(); ++i) {
        acc += integrate_triangle(rule, apex, piece[i], piece[i + 1], [&](Point2 x) {
          return std::pow(std::max(0.0, sign * dot(x, u)), moment);
        });
      }
    };
    if (pieces.positive) integrate_piece(*pieces.positive, 1.0);
    if (pieces.negative) integrate_piece(*pieces.negative, -1.0);
    return std::pow(acc / body_area, 1.0 / moment);
  }

  double value(Point2 theta) const {
    const double len = norm(theta);
    if (!(len > 0.0)) throw ZeroDirection();
    const Point2 u = theta / len;
    if (grid_nodes > 0) {
      const double slot = angle_of(u) / kTwoPi * grid_nodes;
      const double nearest = std::round(slot);
      if (std::abs(slot - nearest) < 1e-12 * grid_nodes) {
        return len * grid[static_cast<std::size_t>(nearest) % grid.size()];
      }
    }
    return len * exact_unit(u);
  }
};

SupportEvaluator centroid_body_exact(const ConvexPolygon& p, double moment, int theta_nodes) {
  if (!(moment >= 1.0) || std::isinf(moment)) {
    throw std::invalid_argument("centroid body exponent must lie in [1, inf)");
  }
  auto table = std::make_shared<CentroidBodyTable>(CentroidBodyTable{
      p, moment, area(p), std::max(0, theta_nodes), {}, collapsed_triangle_rule(12)});
  table->grid.reserve(static_cast<std::size_t>(table->grid_nodes));
  for (int k = 0; k < table->grid_nodes; ++k) {
    table->grid.push_back(table->exact_unit(unit_direction(kTwoPi * k / table->grid_nodes)));
  }
  return SupportEvaluator(SupportEvaluator::CentroidBacking{std::move(table)});
}

// ---------------------------------------------------------------------------
// SupportEvaluator

SupportEvaluator SupportEvaluator::of_polygon(ConvexPolygon polygon) {
  return SupportEvaluator(PolygonBacking{std::move(polygon)});
}

namespace {

// det of sum x x^T as sum over pairs of cross(x_i, x_j)^2, which keeps its
// relative accuracy for nearly collinear points.
double gram_determinant(std::span<const Point2> points) {
  double det = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double c = cross(points[i], points[j]);
      det += c * c;
    }
  }
  return det;
}

}  // namespace

std::optional<double> SupportEvaluator::ellipse_polar_area() const {
  const auto* b = std::get_if<CompositionBacking>(&backing_);
  if (!b || b->body.kind() != CoefficientBody::Kind::lq_ball || b->body.p() != 2.0) return std::nullopt;
  const double det = gram_determinant(b->points);
  if (!(det > 0.0)) return std::nullopt;
  return std::numbers::pi / (b->body.scale() * b->body.scale() * std::sqrt(det));
}

SupportEvaluator SupportEvaluator::of_composition(std::vector<Point2> points, CoefficientBody body) {
  if (static_cast<int>(points.size()) != body.n()) {
    throw std::invalid_argument("point count does not match the coefficient body dimension");
  }
  CompositionBacking b{std::move(points), body, std::nullopt};
  const bool polygonal = body.kind() != CoefficientBody::Kind::lq_ball || std::isinf(body.p());
  if (polygonal) {
    std::vector<Point2> gens = b.points;
    if (body.origin_symmetric()) {
      for (const auto& x : b.points) gens.push_back(-x);
    }
    b.hull = convex_hull(gens);
  }
  for (const auto& x : b.points) {
    b.gram_xx += x.x * x.x;
    b.gram_xy += x.x * x.y;
    b.gram_yy += x.y * x.y;
  }
  return SupportEvaluator(std::move(b));
}

double SupportEvaluator::operator()(Point2 theta) const {
  return std::visit(
      [&](const auto& b) -> double {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, PolygonBacking>) {
          return support(b.polygon, theta);
        } else if constexpr (std::is_same_v<B, CentroidBacking>) {
          return b.table->value(theta);
        } else {
          if (theta.x == 0.0 && theta.y == 0.0) throw ZeroDirection();
          const auto& c = b.body;
          if (c.kind() == CoefficientBody::Kind::lq_ball && c.p() == 2.0) {
            const double quad = theta.x * theta.x * b.gram_xx + 2.0 * theta.x * theta.y * b.gram_xy +
                                theta.y * theta.y * b.gram_yy;
            return c.scale() * std::sqrt(std::max(0.0, quad));
          }
          double small[16];
          std::vector<double> large;
          double* a = small;
          if (b.points.size() > 16) {
            large.resize(b.points.size());
            a = large.data();
          }
          for (std::size_t i = 0; i < b.points.size(); ++i) a[i] = dot(b.points[i], theta);
          return c.support(std::span<const double>(a, b.points.size()));
        }
      },
      backing_);
}

std::vector<double> SupportEvaluator::breakpoints() const {
  std::vector<double> out = std::visit(
      [&](const auto& b) -> std::vector<double> {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, PolygonBacking>) {
          return normal_angles(b.polygon);
        } else if constexpr (std::is_same_v<B, CentroidBacking>) {
          std::vector<double> z;
          for (const auto& v : b.table->polygon.vertices()) append_zero_crossings(z, v);
          return z;
        } else {
          if (b.hull) return normal_angles(*b.hull);
          if (b.body.kind() != CoefficientBody::Kind::lq_ball || b.body.p() == 2.0) return {};
          std::vector<double> z;
          for (const auto& x : b.points) append_zero_crossings(z, x);
          return z;
        }
      },
      backing_);
  sort_unique_angles(out);
  return out;
}

// ---------------------------------------------------------------------------
// Quadrature

double polar_volume_quadrature(const SupportEvaluator& h, const QuadratureOptions& opts) {
  if (opts.panels < 1 || opts.order < 1) throw std::invalid_argument("invalid quadrature options");
  const std::vector<double> cuts = h.breakpoints();
  double total = 0.0;
  if (cuts.empty()) {
    const auto rule = uniform_circle_rule(opts.panels, opts.order);
    for (std::size_t k = 0; k < rule->dirs.size(); ++k) {
      total += rule->weights[k] * inverse_square_term(h(rule->dirs[k]));
    }
    return 0.5 * total;
  }

  const GaussRule g = gauss_legendre(opts.order);
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    const double lo = cuts[c];
    const double hi = c + 1 < cuts.size() ? cuts[c + 1] : cuts[0] + kTwoPi;
    const double len = hi - lo;
    const int count = std::max(1, static_cast<int>(std::ceil(opts.panels * len / kTwoPi)));
    const double width = len / count;
    // Node offsets within a panel are shared, so only panel starts need sincos.
    std::vector<Point2> offsets;
    offsets.reserve(g.nodes.size());
    for (double x : g.nodes) offsets.push_back(unit_direction(0.5 * width * (x + 1.0)));
    for (int k = 0; k < count; ++k) {
      const Point2 start = unit_direction(lo + width * k);
      double panel = 0.0;
      for (std::size_t j = 0; j < offsets.size(); ++j) {
        const Point2 dir{start.x * offsets[j].x - start.y * offsets[j].y,
                         start.y * offsets[j].x + start.x * offsets[j].y};
        panel += g.weights[j] * inverse_square_term(h(dir));
      }
      total += 0.5 * width * panel;
    }
  }
  return 0.5 * total;
}

double hausdorff_support(const SupportEvaluator& h1, const SupportEvaluator& h2, int nodes) {
  std::vector<double> angles = h1.breakpoints();
  const auto more = h2.breakpoints();
  angles.insert(angles.end(), more.begin(), more.end());
  for (int k = 0; k < nodes; ++k) angles.push_back(kTwoPi * k / nodes);
  double worst = 0.0;
  for (double a : angles) {
    const Point2 u = unit_direction(a);
    worst = std::max(worst, std::abs(h1(u) - h2(u)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Santaló point

namespace {

struct EdgeLines {
  std::vector<Point2> normals;
  std::vector<double> offsets;
  std::vector<double> turns;  // cross(n_i, n_{i+1})

  explicit EdgeLines(const ConvexPolygon& p) {
    const std::size_t m = p.size();
    for (std::size_t i = 0; i < m; ++i) {
      normals.push_back(edge_normal(p, i));
      offsets.push_back(dot(normals.back(), p[i]));
    }
    for (std::size_t i = 0; i < m; ++i) turns.push_back(cross(normals[i], normals[(i + 1) % m]));
  }

  // Objective and, when requested, gradient and Hessian (xx, xy, yy).
  bool evaluate(Point2 z, double& value, Point2* grad, double* hess) const {
    const std::size_t m = normals.size();
    double dist[64];
    std::vector<double> spill;
    double* d = dist;
    if (m > 64) {
      spill.resize(m);
      d = spill.data();
    }
    for (std::size_t i = 0; i < m; ++i) {
      d[i] = offsets[i] - dot(normals[i], z);
      if (!(d[i] > 0.0)) return false;
    }
    value = 0.0;
    Point2 g{};
    double hxx = 0.0, hxy = 0.0, hyy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      const double f = turns[i] / (d[i] * d[j]);
      value += f;
      if (grad) {
        const Point2 a = normals[i] / d[i], b = normals[j] / d[j];
        const Point2 u = a + b;
        g += f * u;
        hxx += f * (u.x * u.x + a.x * a.x + b.x * b.x);
        hxy += f * (u.x * u.y + a.x * a.y + b.x * b.y);
        hyy += f * (u.y * u.y + a.y * a.y + b.y * b.y);
      }
    }
    value *= 0.5;
    if (grad) *grad = 0.5 * g;
    if (hess) {
      hess[0] = 0.5 * hxx;
      hess[1] = 0.5 * hxy;
      hess[2] = 0.5 * hyy;
    }
    return true;
  }
};

}  // namespace

double polar_area_about(const ConvexPolygon& p, Point2 z) {
  double value = 0.0;
  if (!EdgeLines(p).evaluate(z, value, nullptr, nullptr)) throw OriginNotInterior();
  return value;
}

SantaloResult santalo_point(const ConvexPolygon& p) {
  const EdgeLines lines(p);
  const double length = diameter(p);
  SantaloResult res;
  Point2 z = centroid(p);
  double value = 0.0, hess[3] = {0.0, 0.0, 0.0};
  Point2 grad;
  constexpr int kMaxIterations = 200;
  for (res.iterations = 0; res.iterations < kMaxIterations; ++res.iterations) {
    lines.evaluate(z, value, &grad, hess);
    res.gradient_norm = norm(grad);
    if (res.gradient_norm * length <= 1e-14 * value) break;

    const double det = hess[0] * hess[2] - hess[1] * hess[1];
    Point2 step = det > 0.0 ? Point2{-(hess[2] * grad.x - hess[1] * grad.y) / det,
                                     -(hess[0] * grad.y - hess[1] * grad.x) / det}
                            : -(length * length / value) * grad;
    const double slope = dot(grad, step);
    if (!(slope < 0.0)) break;

    double alpha = 1.0, trial = 0.0;
    bool accepted = false;
    // Near the minimum the predicted decrease drops below the resolution of
    // the area, so the full Newton step is judged by the gradient instead.
    if (det > 0.0 && -slope <= 1e-12 * value) {
      Point2 cand_grad;
      const Point2 cand = z + step;
      if (lines.evaluate(cand, trial, &cand_grad, nullptr) && norm(cand_grad) < res.gradient_norm) {
        z = cand;
        accepted = true;
      }
    }
    while (!accepted && alpha > 1e-12) {
      const Point2 cand = z + alpha * step;
      if (lines.evaluate(cand, trial, nullptr, nullptr) && trial <= value + 1e-4 * alpha * slope) {
        z = cand;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
    if (alpha * norm(step) <= 1e-16 * length) break;
  }
  lines.evaluate(z, value, &grad, hess);
  res.point = z;
  res.polar_area = value;
  res.gradient_norm = norm(grad);
  res.converged = res.gradient_norm * length <= 1e-9 * value;
  return res;
}

double mahler_product(const ConvexPolygon& p, MahlerCenter center) {
  if (center == MahlerCenter::origin) return area(p) * area(polar(p));
  return area(p) * santalo_point(p).polar_area;
}

double polar_centroid_volume(const ConvexPolygon& p, double moment, const QuadratureOptions& opts) {
  if (!(origin_depth(p) > 1e-12)) throw OriginNotInterior();
  return polar_volume_quadrature(centroid_body_exact(p, moment), opts);
}

// ---------------------------------------------------------------------------
// Random polytopes and estimators

RandomBody random_polytope(std::span<const Point2> points, const CoefficientBody& body) {
  if (static_cast<int>(points.size()) != body.n()) {
    throw std::invalid_argument("point count does not match the coefficient body dimension");
  }
  switch (body.kind()) {
    case CoefficientBody::Kind::cross_polytope: {
      std::vector<Point2> gens(points.begin(), points.end());
      for (const auto& x : points) gens.push_back(-x);
      if (auto hull = convex_hull(gens)) return *hull;
      return Degenerate{};
    }
    case CoefficientBody::Kind::simplex: {
      if (auto hull = convex_hull(points)) return *hull;
      return Degenerate{};
    }
    case CoefficientBody::Kind::lq_ball: {
      double trace = 0.0;
      for (const auto& x : points) trace += dot(x, x);
      if (!(trace > 0.0) || gram_determinant(points) <= 1e-24 * trace * trace) return Degenerate{};
      return SupportEvaluator::of_composition(std::vector<Point2>(points.begin(), points.end()),
                                              body);
    }
  }
  return Degenerate{};
}

std::optional<double> origin_polar_area(const RandomBody& body, const QuadratureOptions& opts) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
    if (!(origin_depth(*poly) > 1e-12)) return std::nullopt;
    return area(polar(*poly));
  }
  if (const auto* h = std::get_if<SupportEvaluator>(&body)) {
    if (const auto exact = h->ellipse_polar_area()) return exact;
    try {
      return polar_volume_quadrature(*h, opts);
    } catch (const NonpositiveSupport&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

double w_integrand(std::span<const Point2> points, const CoefficientBody& body, double r,
                   const QuadratureOptions& opts) {
  if (!body.origin_symmetric()) {
    throw std::invalid_argument("origin polars need an origin-symmetric coefficient body");
  }
  const auto a = origin_polar_area(random_polytope(points, body), opts);
  if (!a) return 0.0;
  return std::pow(*a, -r);
}

double w_santalo_integrand(std::span<const Point2> points, double r) {
  const auto hull = convex_hull(points);
  if (!hull) return 0.0;
  return std::pow(santalo_point(*hull).polar_area, -r);
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

template <class PerSample>
std::vector<double> collect(const ConvexPolygon& k, std::size_t n_points, const EstimatorOptions& opts,
                            PerSample&& per_sample) {
  require(opts.samples >= 1, "estimator needs at least one sample");
  const PolygonSampler sampler(k);
  std::vector<double> values(opts.samples);
  parallel_for(opts.samples, opts.workers, [&](std::size_t i) {
    const auto pts = sampler.sample_matrix(n_points, opts.seed, i);
    values[i] = per_sample(std::span<const Point2>(pts));
  });
  return values;
}

}  // namespace

std::vector<double> w_sample_values(const ConvexPolygon& k, const CoefficientBody& body, double r,
                                    const EstimatorOptions& opts) {
  require(r >= 1.0, "moment order r must be >= 1");
  require(body.origin_symmetric(), "W needs an origin-symmetric coefficient body");
  require(is_symmetric(k) && origin_depth(k) > 1e-12, "W needs an origin-symmetric body");
  const double norm_factor = std::pow(area(k), -r);
  return collect(k, static_cast<std::size_t>(body.n()), opts, [&](std::span<const Point2> x) {
    return norm_factor * w_integrand(x, body, r, opts.quadrature);
  });
}

std::vector<double> w_santalo_sample_values(const ConvexPolygon& k, int n_points, double r,
                                            const EstimatorOptions& opts) {
  require(r >= 1.0, "moment order r must be >= 1");
  require(n_points >= 3, "the Santaló functional needs N >= 3");
  const double norm_factor = std::pow(area(k), -r);
  return collect(k, static_cast<std::size_t>(n_points), opts, [&](std::span<const Point2> x) {
    return norm_factor * w_santalo_integrand(x, r);
  });
}

std::vector<double> sylvester_sample_values(const ConvexPolygon& k, int n_points,
                                            const EstimatorOptions& opts) {
  require(n_points >= 3, "Sylvester's functional needs N >= 3");
  const double inv_area = 1.0 / area(k);
  return collect(k, static_cast<std::size_t>(n_points), opts, [&](std::span<const Point2> x) {
    const auto hull = convex_hull(x);
    return hull ? area(*hull) * inv_area : 0.0;
  });
}

std::vector<double> polar_centroid_sample_values(const ConvexPolygon& k, double moment,
                                                 int n_points, double r,
                                                 const EstimatorOptions& opts) {
  require(r >= 1.0, "moment order r must be >= 1");
  require(is_symmetric(k) && origin_depth(k) > 1e-12, "Z_{p,N} needs an origin-symmetric body");
  const CoefficientBody body = CoefficientBody::for_moment(n_points, moment);
  return collect(k, static_cast<std::size_t>(n_points), opts, [&](std::span<const Point2> x) {
    return w_integrand(x, body, r, opts.quadrature);
  });
}

EstimatorResult estimate_W(const ConvexPolygon& k, const CoefficientBody& body, double r,
                           const EstimatorOptions& opts) {
  return summarize(w_sample_values(k, body, r, opts), opts.seed, opts.ci_level);
}

EstimatorResult estimate_W_santalo(const ConvexPolygon& k, int n_points, double r,
                                   const EstimatorOptions& opts) {
  return summarize(w_santalo_sample_values(k, n_points, r, opts), opts.seed, opts.ci_level);
}

EstimatorResult estimate_sylvester(const ConvexPolygon& k, int n_points, const EstimatorOptions& opts) {
  return summarize(sylvester_sample_values(k, n_points, opts), opts.seed, opts.ci_level);
}

EstimatorResult empirical_polar_centroid_volume(const ConvexPolygon& k, double moment, int n_points,
                                                double r, const EstimatorOptions& opts) {
  return summarize(polar_centroid_sample_values(k, moment, n_points, r, opts), opts.seed,
                   opts.ci_level);
}

}  // namespace stochgeo
