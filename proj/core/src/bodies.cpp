#include "stochgeo/bodies.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "stochgeo/polygon_io.hpp"
#include "stochgeo/sampling.hpp"

namespace stochgeo {
namespace {

constexpr std::uint32_t kBodyStream = 0xB0D1E5u;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_positive(const std::string& field, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + ": '" + field + "'");
  }
  if (used != field.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("invalid " + what + ": '" + field + "'");
  }
  return v;
}

int parse_count(const std::string& field, int minimum) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(field, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid vertex count: '" + field + "'");
  }
  if (used != field.size() || v < minimum || v > 1'000'000) {
    throw std::invalid_argument("invalid vertex count: '" + field + "'");
  }
  return static_cast<int>(v);
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

ConvexPolygon from_list(std::initializer_list<Point2> pts) {
  return ConvexPolygon::from_vertices(std::vector<Point2>(pts));
}

}  // namespace

BodySpec BodySpec::parse(const std::string& descriptor) {
  BodySpec spec;
  if (descriptor.rfind("file:", 0) == 0) {
    spec.kind = BodyKind::polygon_file;
    spec.path = descriptor.substr(5);
    spec.target_area.reset();
    if (spec.path.empty()) throw std::invalid_argument("file: descriptor needs a path");
    return spec;
  }
  const auto parts = split(descriptor, ':');
  const std::string& head = parts.front();
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw std::invalid_argument("malformed body descriptor '" + descriptor + "'");
    }
  };
  if (head == "square" || head == "diamond" || head == "triangle") {
    expect(2, 2);
    spec.kind = head == "square"    ? BodyKind::square
                : head == "diamond" ? BodyKind::diamond
                                    : BodyKind::triangle_centroid_origin;
    spec.k = head == "triangle" ? 3 : 4;
    spec.target_area = parse_positive(parts[1], "area");
  } else if (head == "kgon" || head == "disk") {
    expect(3, 3);
    spec.kind = head == "kgon" ? BodyKind::regular_k_gon : BodyKind::disk_approx;
    spec.k = parse_count(parts[1], 3);
    spec.target_area = parse_positive(parts[2], "area");
  } else if (head == "randsym" || head == "randpoly") {
    expect(3, 4);
    spec.kind = head == "randsym" ? BodyKind::random_symmetric : BodyKind::random_convex;
    spec.k = parse_count(parts[1], head == "randsym" ? 2 : 3);
    spec.target_area = parse_positive(parts[2], "area");
    if (parts.size() == 4) spec.seed = std::stoull(parts[3]);
  } else {
    throw std::invalid_argument("unknown body kind '" + head + "'");
  }
  return spec;
}

std::string BodySpec::describe() const {
  const std::string a = target_area ? format_number(*target_area) : "";
  switch (kind) {
    case BodyKind::square: return "square:" + a;
    case BodyKind::diamond: return "diamond:" + a;
    case BodyKind::triangle_centroid_origin: return "triangle:" + a;
    case BodyKind::regular_k_gon: return "kgon:" + std::to_string(k) + ":" + a;
    case BodyKind::disk_approx: return "disk:" + std::to_string(k) + ":" + a;
    case BodyKind::random_symmetric:
      return "randsym:" + std::to_string(k) + ":" + a + ":" + std::to_string(seed);
    case BodyKind::random_convex:
      return "randpoly:" + std::to_string(k) + ":" + a + ":" + std::to_string(seed);
    case BodyKind::polygon_file: return "file:" + path;
  }
  return "unknown";
}

ConvexPolygon regular_polygon(int k, double circumradius, double phase) {
  if (k < 3) throw std::invalid_argument("regular polygon needs k >= 3");
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    v.push_back(circumradius * unit_direction(phase + 2.0 * std::numbers::pi * j / k));
  }
  return ConvexPolygon::from_vertices(v);
}

ConvexPolygon normalize_area(const ConvexPolygon& p, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("target area must be positive");
  const double current = area(p);
  if (current == a) return p;
  return scale_about_origin(p, std::sqrt(a / current));
}

bool is_symmetric(const ConvexPolygon& p) {
  const ConvexPolygon mirrored = linear_map(p, Mat2::diag(-1.0, -1.0));
  return hausdorff(p, mirrored) <= 1e-9 * diameter(p);
}

ConvexPolygon random_ellipse_polygon(int vertices, std::uint64_t seed, std::uint64_t index,
                                     bool symmetric) {
  if (vertices < 3 || (symmetric && (vertices % 2 != 0 || vertices < 4))) {
    throw std::invalid_argument("invalid vertex count for random polygon");
  }
  const SeededStream rng{seed, index, kBodyStream};
  std::uint32_t draw = 0;
  const double ratio = 1.0 / 3.0 + (2.0 / 3.0) * rng.uniform(draw++);
  const double tilt = std::numbers::pi * rng.uniform(draw++);
  const Mat2 shape = Mat2::rotation(tilt) * Mat2::diag(1.0, ratio);

  const int slots = symmetric ? vertices / 2 : vertices;
  const double sweep = symmetric ? std::numbers::pi : 2.0 * std::numbers::pi;
  std::vector<Point2> pts;
  for (int j = 0; j < slots; ++j) {
    // Stratified angles keep neighbouring vertices well separated.
    const double angle = sweep * (j + 0.1 + 0.8 * rng.uniform(draw++)) / slots;
    const Point2 v = shape(unit_direction(angle));
    pts.push_back(v);
    if (symmetric) pts.push_back(-v);
  }
  ConvexPolygon poly = ConvexPolygon::from_vertices(pts);
  if (symmetric) return poly;

  poly = translate(poly, -centroid(poly));
  const double depth = origin_depth(poly);
  const double r = 0.3 * depth * rng.uniform(draw++);
  const double phi = 2.0 * std::numbers::pi * rng.uniform(draw++);
  return translate(poly, r * unit_direction(phi));
}

ConvexPolygon realize(const BodySpec& spec) {
  if (spec.kind != BodyKind::polygon_file && !spec.target_area) {
    throw std::invalid_argument("body spec needs a target area");
  }
  ConvexPolygon raw = [&] {
    switch (spec.kind) {
      case BodyKind::square: return from_list({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
      case BodyKind::diamond: return from_list({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
      case BodyKind::regular_k_gon:
      case BodyKind::disk_approx: return regular_polygon(spec.k);
      case BodyKind::triangle_centroid_origin: {
        const ConvexPolygon t = regular_polygon(3);
        return translate(t, -centroid(t));
      }
      case BodyKind::random_symmetric:
        return random_ellipse_polygon(2 * spec.k, spec.seed, 0, true);
      case BodyKind::random_convex: return random_ellipse_polygon(spec.k, spec.seed, 0, false);
      case BodyKind::polygon_file: return read_polygon_file(spec.path).polygon;
    }
    throw std::invalid_argument("unknown body kind");
  }();
  if (!spec.target_area) return raw;
  return normalize_area(raw, *spec.target_area);
}

}  // namespace stochgeo
