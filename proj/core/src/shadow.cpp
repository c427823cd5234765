#include "stochgeo/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stochgeo/bodies.hpp"
#include "stochgeo/errors.hpp"
#include "stochgeo/parallel.hpp"
#include "stochgeo/sampling.hpp"

namespace stochgeo {
namespace {

// Parameter t at which a + t * dir meets the line through p and q.
std::optional<double> line_hit(Point2 p, Point2 q, Point2 a, Point2 dir) {
  const Point2 d = q - p;
  const double den = cross(d, dir);
  if (std::abs(den) <= 1e-15 * norm(d)) return std::nullopt;
  return -cross(d, a - p) / den;
}

CoupledSample couple_with(const RSMovement& m, const PolygonSampler& sampler, std::size_t n_points,
                          std::uint64_t seed, std::uint64_t sample_index, bool mirror) {
  CoupledSample out;
  out.theta = m.theta();
  out.points = sampler.sample_matrix(n_points, seed, sample_index);
  out.shift.reserve(n_points);
  const Point2 axis = m.axis();
  for (auto& x : out.points) {
    if (mirror) x = x - 2.0 * dot(x, out.theta) * out.theta;
    out.shift.push_back(m.beta(dot(x, axis)));
  }
  return out;
}

double pooled(const EstimatorResult& a, const EstimatorResult& b) {
  return std::hypot(a.std_error, b.std_error);
}

}  // namespace

double RSMovement::beta(double s) const {
  if (!active_) return 0.0;
  const double span = s_vertex_ - s_chord_;
  auto hat = [&](double x) {
    const double u = (x - s_chord_) / span;
    return u > 0.0 ? std::min(u, 1.0) : 0.0;
  };
  return symmetric() ? hat(s) - hat(-s) : hat(s);
}

std::optional<std::size_t> antipodal_vertex(const ConvexPolygon& p, std::size_t i) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double d = norm(p[j] + p[i]);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  if (best_d <= 1e-9 * p.scale()) return best;
  return std::nullopt;
}

RSMovement make_movement(const ConvexPolygon& p, std::size_t vertex, bool symmetric) {
  if (vertex >= p.size()) throw std::invalid_argument("vertex index out of range");
  if (p.size() < 4) throw NoValidDirection("a triangle admits no vertex-removing movement");
  RSMovement m(p);
  m.moved_ = vertex;
  if (symmetric) {
    if (!is_symmetric(p)) throw std::invalid_argument("symmetric movement needs a symmetric polygon");
    if (p.size() < 6) {
      throw NoValidDirection("symmetric movement needs at least three antipodal pairs");
    }
    m.antipode_ = antipodal_vertex(p, vertex);
    if (!m.antipode_) throw std::invalid_argument("vertex has no antipode");
  }
  const auto i = static_cast<std::ptrdiff_t>(vertex);
  const Point2 a0 = p.vertex(i - 2), a1 = p.vertex(i - 1), a2 = p.vertex(i), a3 = p.vertex(i + 1),
               a4 = p.vertex(i + 2);
  const Point2 chord = a3 - a1;
  const double len = norm(chord);
  if (!(len > 1e-15 * p.scale())) throw NoValidDirection("neighbouring vertices coincide");
  m.theta_ = chord / len;
  const Point2 axis = m.axis();
  m.s_chord_ = dot(a1, axis);
  m.s_vertex_ = dot(a2, axis);

  const auto low = line_hit(a0, a1, a2, m.theta_);
  const auto high = line_hit(a3, a4, a2, m.theta_);
  if (!low || !high || !(*low < 0.0) || !(*high > 0.0)) {
    throw NoValidDirection("movement range is not a neighbourhood of 0");
  }
  m.t_min_ = *low;
  m.t_max_ = *high;
  return m;
}

RSMovement without_profile(const RSMovement& m) {
  RSMovement c = m;
  c.active_ = false;
  return c;
}

ConvexPolygon realize_at(const RSMovement& m, double t) {
  const double eps = 1e-12 * (m.t_max() - m.t_min());
  if (!(t >= m.t_min() - eps && t <= m.t_max() + eps)) {
    throw OutOfRange("t = " + std::to_string(t) + " outside the movement range");
  }
  if (!m.active()) return m.base();
  t = std::clamp(t, m.t_min(), m.t_max());
  std::vector<Point2> v(m.base().vertices().begin(), m.base().vertices().end());
  v[m.moved_vertex()] += t * m.theta();
  if (m.antipode()) v[*m.antipode()] -= t * m.theta();
  auto hull = convex_hull(v);
  if (!hull) throw DegeneratePolygon("moved polygon is flat");
  return *hull;
}

std::vector<Point2> CoupledSample::image(double t) const {
  std::vector<Point2> out(points.size());
  image(t, out);
  return out;
}

void CoupledSample::image(double t, std::span<Point2> out) const {
  for (std::size_t j = 0; j < points.size(); ++j) out[j] = points[j] + (t * shift[j]) * theta;
}

CoupledSample couple_sample(const RSMovement& m, std::size_t n_points, std::uint64_t seed,
                            std::uint64_t sample_index, bool mirror) {
  return couple_with(m, PolygonSampler(m.base()), n_points, seed, sample_index, mirror);
}

std::vector<double> sample_convexity_profile(const RSMovement& m, const CoefficientBody& body,
                                             double r, const CoupledSample& sample,
                                             std::span<const double> t_grid,
                                             const QuadratureOptions& opts) {
  const bool origin_polar = body.origin_symmetric();
  if (origin_polar && !m.symmetric()) {
    throw std::invalid_argument("origin polars need a symmetric movement");
  }
  std::vector<double> out;
  out.reserve(t_grid.size());
  std::vector<Point2> pts(sample.points.size());
  for (double t : t_grid) {
    sample.image(t, pts);
    out.push_back(origin_polar ? w_integrand(pts, body, r, opts) : w_santalo_integrand(pts, r));
  }
  return out;
}

std::size_t midpoint_violations(std::span<const double> profile, double slack) {
  double scale = 0.0;
  for (double v : profile) scale = std::max(scale, std::abs(v));
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
    if (profile[i] > 0.5 * (profile[i - 1] + profile[i + 1]) + slack * scale) ++count;
  }
  return count;
}

double convexity_slack(const CoefficientBody& body) {
  return body.origin_symmetric() ? 1e-9 : 1e-7;
}

std::vector<double> uniform_t_grid(const RSMovement& m, std::size_t count) {
  if (count < 2) throw std::invalid_argument("t grid needs at least two points");
  std::vector<double> g(count);
  for (std::size_t k = 0; k < count; ++k) {
    g[k] = m.t_min() + (m.t_max() - m.t_min()) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  g.back() = m.t_max();
  return g;
}

SweepResult sweep_W(const RSMovement& m, const CoefficientBody& body, double r,
                    std::span<const double> t_grid, const EstimatorOptions& opts, bool mirror) {
  if (!(r >= 1.0)) throw std::invalid_argument("moment order r must be >= 1");
  if (opts.samples < 1) throw std::invalid_argument("sweep needs at least one sample");
  if (body.origin_symmetric() && !m.symmetric()) {
    throw std::invalid_argument("origin polars need a symmetric movement");
  }
  if (!body.origin_symmetric() && body.n() < 3) {
    throw std::invalid_argument("the Santaló functional needs N >= 3");
  }
  for (double t : t_grid) (void)realize_at(m, t);

  SweepResult res;
  res.t.assign(t_grid.begin(), t_grid.end());
  res.slack = convexity_slack(body);
  res.values.assign(t_grid.size(), std::vector<double>(opts.samples));
  std::vector<unsigned char> flagged(opts.samples, 0);
  const PolygonSampler sampler(m.base());
  const double norm_factor = std::pow(area(m.base()), -r);
  const auto n_points = static_cast<std::size_t>(body.n());

  parallel_for(opts.samples, opts.workers, [&](std::size_t i) {
    const CoupledSample s = couple_with(m, sampler, n_points, opts.seed, i, mirror);
    const auto profile = sample_convexity_profile(m, body, r, s, t_grid, opts.quadrature);
    for (std::size_t k = 0; k < profile.size(); ++k) res.values[k][i] = norm_factor * profile[k];
    flagged[i] = midpoint_violations(profile, res.slack) > 0 ? 1 : 0;
  });

  for (auto f : flagged) res.violations += f;
  for (const auto& col : res.values) {
    res.estimates.push_back(summarize(col, opts.seed, opts.ci_level));
  }
  return res;
}

ReductionResult reduce_to_extremizer(const ConvexPolygon& p, ReductionMode mode,
                                     const CoefficientBody& body, double r,
                                     const EstimatorOptions& opts) {
  const bool sym = mode == ReductionMode::symmetric;
  if (sym) {
    if (!body.origin_symmetric()) {
      throw std::invalid_argument("symmetric reduction needs an origin-symmetric coefficient body");
    }
    if (!is_symmetric(p)) throw std::invalid_argument("symmetric reduction needs a symmetric polygon");
  } else if (body.origin_symmetric()) {
    throw std::invalid_argument("general reduction uses the simplex with Santaló-point polars");
  }
  const std::size_t target = sym ? 4 : 3;

  ReductionResult res{p, {}, true};
  ConvexPolygon current = p;
  while (current.size() > target) {
    std::size_t best = 0;
    double best_cap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < current.size(); ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      const double cap = 0.5 * std::abs(cross(current.vertex(k - 1), current.vertex(k),
                                              current.vertex(k + 1)));
      if (cap < best_cap) {
        best_cap = cap;
        best = i;
      }
    }
    const RSMovement mv = make_movement(current, best, sym);
    const double grid[3] = {mv.t_min(), 0.0, mv.t_max()};
    const SweepResult sw = sweep_W(mv, body, r, grid, opts);

    ReductionStep step{current, best, mv.t_min(), mv.t_max(), 0.0,
                       sw.estimates[1], sw.estimates[0], sw.estimates[2], 0};
    const bool go_high = step.w_at_max.mean >= step.w_at_min.mean;
    step.t_chosen = go_high ? mv.t_max() : mv.t_min();
    const EstimatorResult& chosen = go_high ? step.w_at_max : step.w_at_min;
    ConvexPolygon next = realize_at(mv, step.t_chosen);
    if (next.size() >= current.size()) throw std::logic_error("movement endpoint kept every vertex");
    step.vertices_after = next.size();

    if (chosen.mean < step.w_start.mean - 3.0 * pooled(chosen, step.w_start)) res.non_decreasing = false;
    if (!res.trace.empty()) {
      const auto& prev = res.trace.back();
      const EstimatorResult& prev_chosen = prev.t_chosen == prev.t_max ? prev.w_at_max : prev.w_at_min;
      if (step.w_start.mean < prev_chosen.mean - 3.0 * pooled(prev_chosen, step.w_start)) {
        res.non_decreasing = false;
      }
    }
    res.trace.push_back(std::move(step));
    current = std::move(next);
    if (res.trace.size() > 1000) throw std::logic_error("reduction did not terminate");
  }
  res.final_polygon = current;
  return res;
}

std::string classify_shape(const ConvexPolygon& p) {
  if (p.size() == 3) return "triangle";
  if (p.size() == 4 && norm(p[0] + p[2] - p[1] - p[3]) <= 1e-9 * p.scale()) return "parallelogram";
  return "other";
}

}  // namespace stochgeo
