#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "stochgeo/bodies.hpp"
#include "stochgeo/functionals.hpp"
#include "stochgeo/parallel.hpp"
#include "stochgeo/sampling.hpp"
#include "stochgeo/shadow.hpp"

namespace stochgeo::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json json_number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

Json vertices_json(const ConvexPolygon& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back({v.x, v.y});
  return out;
}

Json estimate_json(const EstimatorResult& e) {
  return {{"mean", e.mean},         {"std_error", e.std_error}, {"ci_low", e.ci_low},
          {"ci_high", e.ci_high},   {"ci_level", e.ci_level},   {"n_samples", e.n_samples},
          {"seed", e.master_seed}};
}

Json body_json(const std::string& descriptor, const ConvexPolygon& p) {
  return {{"descriptor", descriptor}, {"area", area(p)}, {"vertices", vertices_json(p)}};
}

EstimatorOptions estimator_options(const ExperimentConfig& cfg) {
  EstimatorOptions o;
  o.samples = cfg.samples;
  o.seed = cfg.seed;
  o.workers = cfg.workers;
  o.ci_level = cfg.ci_level;
  o.quadrature = {cfg.nodes, cfg.order};
  return o;
}

Functional resolve(const ExperimentConfig& cfg) {
  if (cfg.functional != Functional::automatic) return cfg.functional;
  if (cfg.coeff == "simplex") return Functional::santalo;
  if (cfg.p) return Functional::centroid;
  return Functional::w;
}

std::vector<double> functional_values(const ConvexPolygon& k, Functional f,
                                      const ExperimentConfig& cfg) {
  const auto opts = estimator_options(cfg);
  switch (f) {
    case Functional::santalo:
      return w_santalo_sample_values(k, cfg.n_points, cfg.r, opts);
    case Functional::centroid:
      if (!cfg.p) throw std::invalid_argument("the centroid functional needs --p");
      return polar_centroid_sample_values(k, *cfg.p, cfg.n_points, cfg.r, opts);
    case Functional::sylvester:
      return sylvester_sample_values(k, cfg.n_points, opts);
    default:
      return w_sample_values(k, CoefficientBody::parse(cfg.coeff, cfg.n_points), cfg.r, opts);
  }
}

double median(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double hi = *mid;
  return 0.5 * (hi + *std::max_element(v.begin(), mid));
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

Json check_entry(const std::string& name, double value, double expected, double tol, bool relative) {
  const double abs_err = std::abs(value - expected);
  const double rel_err = abs_err / std::abs(expected);
  const bool pass = (relative ? rel_err : abs_err) <= tol;
  return {{"name", name},         {"value", value},
          {"expected", expected}, {"abs_error", abs_err},
          {"rel_error", rel_err}, {"tolerance", tol},
          {"tolerance_kind", relative ? "relative" : "absolute"},
          {"pass", pass}};
}

Json bound_entry(const std::string& name, double value, double bound, double slack) {
  return {{"name", name},   {"value", value},
          {"lower_bound", bound}, {"slack", slack},
          {"pass", value >= bound - slack}};
}

}  // namespace

std::string functional_name(Functional f) {
  switch (f) {
    case Functional::automatic: return "auto";
    case Functional::w: return "w";
    case Functional::santalo: return "santalo";
    case Functional::centroid: return "centroid";
    case Functional::sylvester: return "sylvester";
  }
  return "auto";
}

Functional parse_functional(const std::string& text) {
  for (auto f : {Functional::automatic, Functional::w, Functional::santalo, Functional::centroid,
                 Functional::sylvester}) {
    if (functional_name(f) == text) return f;
  }
  throw std::invalid_argument("unknown functional '" + text + "'");
}

void ExperimentConfig::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  need(samples >= 1, "--samples must be positive");
  need(n_points >= 2, "--n-points must be at least 2");
  need(r >= 1.0, "--r must be >= 1");
  need(!p || *p >= 1.0, "--p must be >= 1");
  need(nodes >= 1 && order >= 1, "--nodes and --order must be positive");
  need(t_grid >= 3, "--t-grid needs at least 3 points");
  need(trials >= 1, "--trials must be positive");
  need(!ladder.empty(), "--ladder must not be empty");
  for (int n : ladder) need(n >= 2, "ladder entries must be at least 2");
  need(ci_level > 0.0 && ci_level < 1.0, "--ci-level must lie in (0, 1)");
}

Json ExperimentConfig::to_json() const {
  return {{"command", command},
          {"body", body},
          {"vs", vs ? Json(*vs) : Json(nullptr)},
          {"coeff", coeff},
          {"functional", functional_name(functional)},
          {"n_points", n_points},
          {"r", r},
          {"p", p ? json_number(*p) : Json(nullptr)},
          {"samples", samples},
          {"seed", seed},
          {"nodes", nodes},
          {"order", order},
          {"t_grid", t_grid},
          {"vertex", vertex},
          {"flat", flat},
          {"ladder", ladder},
          {"trials", trials},
          {"ci_level", ci_level}};
}

CommandOutput cmd_verify_constants(const ExperimentConfig& cfg) {
  const double centroid_polar = 4.0 * std::numbers::pi / std::sqrt(3.0) + 6.0;
  const double centroid_product = 16.0 * std::numbers::pi / std::sqrt(3.0) + 24.0;
  const QuadratureOptions quad{cfg.nodes, cfg.order};

  const ConvexPolygon square = realize(BodySpec::parse("square:4"));
  const ConvexPolygon hexagon = regular_polygon(6);
  const ConvexPolygon triangle = realize(BodySpec::parse("triangle:1"));

  Json checks = Json::array();
  const double z1 = polar_centroid_volume(square, 1.0, quad);
  checks.push_back(check_entry("square_centroid_polar_area", z1, centroid_polar, 1e-6, true));
  checks.push_back(
      check_entry("square_centroid_volume_product", z1 * area(square), centroid_product, 1e-6, true));
  const SantaloResult s = santalo_point(triangle);
  checks.push_back(
      check_entry("triangle_santalo_volume_product", s.polar_area * area(triangle), 6.75, 1e-6, true));
  checks.push_back(check_entry("triangle_santalo_point_offset", norm(s.point - centroid(triangle)),
                               0.0, 1e-7, false));
  checks.push_back(check_entry("square_mahler_product", mahler_product(square), 8.0, 1e-12, false));
  checks.push_back(check_entry("hexagon_mahler_product", mahler_product(hexagon), 9.0, 1e-9, false));

  constexpr std::size_t kRandomBodies = 100;
  std::vector<double> mahler(kRandomBodies), centroid_prod(kRandomBodies);
  parallel_for(kRandomBodies, cfg.workers, [&](std::size_t i) {
    const int pairs = 2 + static_cast<int>(i % 5);
    const ConvexPolygon p = random_ellipse_polygon(2 * pairs, cfg.seed, i, true);
    mahler[i] = mahler_product(p);
    centroid_prod[i] = polar_centroid_volume(p, 1.0, quad) * area(p);
  });
  checks.push_back(bound_entry("random_symmetric_min_mahler_product",
                               *std::min_element(mahler.begin(), mahler.end()), 8.0, 1e-9));
  checks.push_back(bound_entry("random_symmetric_min_centroid_product",
                               *std::min_element(centroid_prod.begin(), centroid_prod.end()),
                               centroid_product, 1e-6));

  bool ok = true;
  for (const auto& c : checks) ok = ok && c["pass"].get<bool>();
  CommandOutput out;
  out.ok = ok;
  out.report = {{"command", "verify-constants"},
                {"config", cfg.to_json()},
                {"checks", checks},
                {"pass", ok}};
  return out;
}

CommandOutput cmd_dominance(const ExperimentConfig& cfg) {
  cfg.validate();
  const Functional f = resolve(cfg);
  if (f == Functional::sylvester) throw std::invalid_argument("dominance compares polar functionals");
  const ConvexPolygon k = realize(BodySpec::parse(cfg.body));
  const std::string vs = cfg.vs.value_or(f == Functional::santalo ? "triangle:4" : "square:4");
  const ConvexPolygon q = normalize_area(realize(BodySpec::parse(vs)), area(k));

  const auto lower = functional_values(k, f, cfg);
  const auto upper = functional_values(q, f, cfg);
  const PairedComparison cmp = compare_paired(lower, upper, cfg.seed, cfg.ci_level);

  CommandOutput out;
  out.ok = cmp.dominance_holds || cmp.identical;
  out.report = {{"command", "dominance"},
                {"config", cfg.to_json()},
                {"functional", functional_name(f)},
                {"body", body_json(cfg.body, k)},
                {"extremizer", body_json(vs, q)},
                {"body_estimate", estimate_json(cmp.lower)},
                {"extremizer_estimate", estimate_json(cmp.upper)},
                {"difference", estimate_json(cmp.difference)},
                {"one_sided_level", cmp.one_sided_level},
                {"lower_confidence_bound", cmp.lower_confidence_bound},
                {"identical", cmp.identical},
                {"dominance_holds", cmp.dominance_holds}};
  return out;
}

CommandOutput cmd_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const ConvexPolygon k = realize(BodySpec::parse(cfg.body));
  const CoefficientBody c = CoefficientBody::parse(cfg.coeff, cfg.n_points);
  RSMovement mv = make_movement(k, cfg.vertex, c.origin_symmetric());
  if (cfg.flat) mv = without_profile(mv);
  const auto grid = uniform_t_grid(mv, cfg.t_grid);
  const SweepResult sw = sweep_W(mv, c, cfg.r, grid, estimator_options(cfg));

  std::string csv = "t,mean,std_error,ci_low,ci_high\n";
  Json points = Json::array();
  std::vector<SeriesPoint> series;
  double lo_mean = kInf, hi_mean = -kInf;
  for (std::size_t i = 0; i < sw.t.size(); ++i) {
    const auto& e = sw.estimates[i];
    csv += fmt::format("{},{},{},{},{}\n", sw.t[i], e.mean, e.std_error, e.ci_low, e.ci_high);
    points.push_back({{"t", sw.t[i]}, {"estimate", estimate_json(e)}});
    series.push_back({sw.t[i], e.mean, e.ci_low, e.ci_high});
    lo_mean = std::min(lo_mean, e.mean);
    hi_mean = std::max(hi_mean, e.mean);
  }

  CommandOutput out;
  out.ok = sw.violations == 0;
  out.table = std::move(csv);
  if (cfg.svg) {
    out.svg = render_band_svg(series, fmt::format("W along the movement of vertex {}", cfg.vertex),
                              "t", "W estimate");
  }
  out.report = {{"command", "sweep"},
                {"config", cfg.to_json()},
                {"body", body_json(cfg.body, k)},
                {"movement",
                 {{"vertex", mv.moved_vertex()},
                  {"antipode", mv.antipode() ? Json(*mv.antipode()) : Json(nullptr)},
                  {"theta", {mv.theta().x, mv.theta().y}},
                  {"t_min", mv.t_min()},
                  {"t_max", mv.t_max()},
                  {"flat", !mv.active()}}},
                {"points", points},
                {"profile_slack", sw.slack},
                {"samples_with_violations", sw.violations},
                {"mean_range", hi_mean - lo_mean},
                {"pass", out.ok}};
  return out;
}

CommandOutput cmd_converge(const ExperimentConfig& cfg) {
  cfg.validate();
  const ConvexPolygon k = realize(BodySpec::parse(cfg.body));
  const QuadratureOptions quad{cfg.nodes, cfg.order};
  const PolygonSampler sampler(k);

  // The limit of [X]C as N grows: K itself for the cross-polytope family,
  // the p-centroid body for scaled lq balls.
  const CoefficientBody probe = CoefficientBody::parse(cfg.coeff, 2);
  if (!probe.origin_symmetric()) throw std::invalid_argument("converge needs a symmetric coefficient body");
  const double limit_p = probe.p();
  const bool polygon_limit = std::isinf(limit_p);
  std::optional<SupportEvaluator> limit;
  constexpr int kGrid = 4096;
  std::vector<Point2> dirs(kGrid);
  std::vector<double> limit_h(kGrid);
  double limit_polar = 0.0;
  if (polygon_limit) {
    limit_polar = area(polar(k));
  } else {
    limit = centroid_body_exact(k, limit_p, 0);
    limit_polar = polar_volume_quadrature(*limit, quad);
  }
  for (int j = 0; j < kGrid; ++j) {
    dirs[j] = unit_direction(2.0 * std::numbers::pi * j / kGrid);
    limit_h[j] = polygon_limit ? support(k, dirs[j]) : (*limit)(dirs[j]);
  }
  const ConvexPolygon k_polar = polar(k);
  const bool polar_ladder = probe.kind() == CoefficientBody::Kind::cross_polytope;

  Json rungs = Json::array();
  std::vector<double> med_h, med_polar;
  EstimatorResult last{};
  for (int n : cfg.ladder) {
    const CoefficientBody c = CoefficientBody::parse(cfg.coeff, n);
    std::vector<double> dist(cfg.trials), polar_dist(cfg.trials);
    parallel_for(cfg.trials, cfg.workers, [&](std::size_t i) {
      const auto pts = sampler.sample_matrix(static_cast<std::size_t>(n), cfg.seed, i);
      const RandomBody body = random_polytope(pts, c);
      dist[i] = polar_dist[i] = kInf;
      if (const auto* poly = std::get_if<ConvexPolygon>(&body)) {
        dist[i] = hausdorff(*poly, k);
        if (origin_depth(*poly) > 1e-12) polar_dist[i] = hausdorff(polar(*poly), k_polar);
      } else if (const auto* h = std::get_if<SupportEvaluator>(&body)) {
        double worst = 0.0;
        for (int j = 0; j < kGrid; ++j) worst = std::max(worst, std::abs((*h)(dirs[j]) - limit_h[j]));
        dist[i] = worst;
      }
    });

    std::vector<double> drift(cfg.samples);
    parallel_for(cfg.samples, cfg.workers, [&](std::size_t i) {
      const auto pts = sampler.sample_matrix(static_cast<std::size_t>(n), cfg.seed ^ 0x9E3779B97F4A7C15ULL, i);
      drift[i] = w_integrand(pts, c, cfg.r, quad);
    });
    last = summarize(drift, cfg.seed, cfg.ci_level);
    const double target = std::pow(limit_polar, -cfg.r);

    med_h.push_back(median(dist));
    Json rung = {{"n_points", n},
                 {"median_hausdorff", json_number(med_h.back())},
                 {"inverse_polar_moment", estimate_json(last)},
                 {"limit_inverse_polar_moment", target},
                 {"relative_drift", (last.mean - target) / target}};
    if (polar_ladder) {
      med_polar.push_back(median(polar_dist));
      rung["median_polar_hausdorff"] = json_number(med_polar.back());
    }
    rungs.push_back(std::move(rung));
  }

  const double target = std::pow(limit_polar, -cfg.r);
  const bool h_dec = strictly_decreasing(med_h);
  const bool polar_dec = !polar_ladder || strictly_decreasing(med_polar);
  // [X]B_1^N approaches a polygon only at rate ~1/N, so the 2% drift check is
  // made for centroid-body limits.
  const bool drift_ok = polygon_limit || std::abs(last.mean - target) <= 0.02 * target;
  CommandOutput out;
  out.ok = h_dec && polar_dec && drift_ok;
  out.report = {{"command", "converge"},
                {"config", cfg.to_json()},
                {"body", body_json(cfg.body, k)},
                {"limit", polygon_limit ? "body" : fmt::format("centroid body p={}", limit_p)},
                {"limit_polar_area", limit_polar},
                {"rungs", rungs},
                {"hausdorff_decreasing", h_dec},
                {"polar_hausdorff_decreasing", polar_ladder ? Json(polar_dec) : Json(nullptr)},
                {"final_drift_within_2pct", polygon_limit ? Json(nullptr) : Json(drift_ok)},
                {"pass", out.ok}};
  return out;
}

CommandOutput cmd_reduce(const ExperimentConfig& cfg) {
  cfg.validate();
  const ConvexPolygon k = realize(BodySpec::parse(cfg.body));
  const CoefficientBody c = CoefficientBody::parse(cfg.coeff, cfg.n_points);
  const ReductionMode mode = c.origin_symmetric() ? ReductionMode::symmetric : ReductionMode::general;
  const ReductionResult res = reduce_to_extremizer(k, mode, c, cfg.r, estimator_options(cfg));

  std::string lines;
  Json steps = Json::array();
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const auto& s = res.trace[i];
    Json rec = {{"step", i},
                {"vertices", vertices_json(s.polygon)},
                {"vertex", s.vertex},
                {"t_min", s.t_min},
                {"t_max", s.t_max},
                {"t_chosen", s.t_chosen},
                {"w_start", estimate_json(s.w_start)},
                {"w_at_min", estimate_json(s.w_at_min)},
                {"w_at_max", estimate_json(s.w_at_max)},
                {"vertices_after", s.vertices_after}};
    lines += rec.dump() + "\n";
    steps.push_back(std::move(rec));
  }
  const std::string shape = classify_shape(res.final_polygon);
  const std::string expected = mode == ReductionMode::symmetric ? "parallelogram" : "triangle";

  CommandOutput out;
  out.ok = shape == expected && res.non_decreasing;
  out.table = std::move(lines);
  out.report = {{"command", "reduce"},
                {"config", cfg.to_json()},
                {"body", body_json(cfg.body, k)},
                {"mode", mode == ReductionMode::symmetric ? "symmetric" : "general"},
                {"steps", res.trace.size()},
                {"final_vertices", vertices_json(res.final_polygon)},
                {"final_shape", shape},
                {"expected_shape", expected},
                {"non_decreasing", res.non_decreasing},
                {"pass", out.ok}};
  return out;
}

CommandOutput cmd_estimate(const ExperimentConfig& cfg) {
  cfg.validate();
  const Functional f = resolve(cfg);
  const ConvexPolygon k = realize(BodySpec::parse(cfg.body));
  const EstimatorResult e = summarize(functional_values(k, f, cfg), cfg.seed, cfg.ci_level);
  std::string coeff = cfg.coeff;
  if (f == Functional::santalo) coeff = "simplex";
  if (f == Functional::centroid) coeff = CoefficientBody::for_moment(cfg.n_points, *cfg.p).describe();
  if (f == Functional::sylvester) coeff = "none";

  CommandOutput out;
  out.report = {{"command", "estimate"},
                {"config", cfg.to_json()},
                {"functional", functional_name(f)},
                {"body", cfg.body},
                {"C", coeff},
                {"N", cfg.n_points},
                {"r", cfg.r},
                {"p", cfg.p ? json_number(*cfg.p) : Json(nullptr)},
                {"mean", e.mean},
                {"std_error", e.std_error},
                {"ci", {e.ci_low, e.ci_high}},
                {"ci_level", e.ci_level},
                {"n_samples", e.n_samples},
                {"seed", e.master_seed}};
  return out;
}

CommandOutput run_command(const ExperimentConfig& cfg) {
  if (cfg.command == "verify-constants") return cmd_verify_constants(cfg);
  if (cfg.command == "dominance") return cmd_dominance(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  if (cfg.command == "converge") return cmd_converge(cfg);
  if (cfg.command == "reduce") return cmd_reduce(cfg);
  if (cfg.command == "estimate") return cmd_estimate(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

std::string render_band_svg(const std::vector<SeriesPoint>& pts, const std::string& title,
                            const std::string& x_label, const std::string& y_label) {
  constexpr double kW = 640, kH = 400, kL = 70, kR = 20, kT = 40, kB = 50;
  double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min({y0, p.lo, p.y});
    y1 = std::max({y1, p.hi, p.y});
  }
  if (pts.empty()) x0 = y0 = 0.0, x1 = y1 = 1.0;
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) {
    const double pad = std::max(1e-12, std::abs(y0) * 1e-3);
    y0 -= pad;
    y1 += pad;
  }
  auto sx = [&](double x) { return kL + (x - x0) / (x1 - x0) * (kW - kL - kR); };
  auto sy = [&](double y) { return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB); };

  std::string band, line;
  for (const auto& p : pts) band += fmt::format("{:.2f},{:.2f} ", sx(p.x), sy(p.hi));
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) band += fmt::format("{:.2f},{:.2f} ", sx(it->x), sy(it->lo));
  for (const auto& p : pts) line += fmt::format("{:.2f},{:.2f} ", sx(p.x), sy(p.y));

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">{3}</text>\n",
      kW, kH, kW / 2, title);
  svg += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>\n", kL, kT,
      kW - kL - kR, kH - kT - kB);
  svg += fmt::format("<polygon points=\"{}\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\"/>\n", band);
  svg += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"2\"/>\n", line);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{:.4g}</text>\n"
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n",
      kL, kH - kB + 16, x0, kW - kR, kH - kB + 16, x1);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.6g}</text>\n"
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.6g}</text>\n",
      kL - 4, kH - kB, y0, kL - 4, kT + 10, y1);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
      kL + (kW - kL - kR) / 2, kH - 12, x_label);
  svg += fmt::format(
      "<text x=\"16\" y=\"{0}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 16 {0})\">{1}</text>\n",
      kT + (kH - kT - kB) / 2, y_label);
  svg += "</svg>\n";
  return svg;
}

}  // namespace stochgeo::cli
