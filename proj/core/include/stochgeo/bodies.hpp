#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stochgeo/geom2.hpp"

namespace stochgeo {

enum class BodyKind {
  square,                    // origin-symmetric square
  diamond,                   // origin-symmetric l1 ball
  regular_k_gon,             // circumcentred at the origin, vertex on the +x axis
  triangle_centroid_origin,  // equilateral, centroid at the origin
  polygon_file,              // polygon interchange file, homothety about the origin
  disk_approx,               // regular k-gon standing in for the disk of equal area
  random_symmetric,          // 2k vertices on a random centred ellipse
  random_convex,             // k vertices on a random ellipse, random offset
};

struct BodySpec {
  BodyKind kind = BodyKind::square;
  int k = 4;  // vertex count (pairs for random_symmetric)
  // Required for every kind except polygon_file, where absent means "keep".
  std::optional<double> target_area = 4.0;
  std::string path;
  std::uint64_t seed = 0;  // random_* kinds only

  // Parses a CLI descriptor: square:AREA, diamond:AREA, kgon:K:AREA,
  // triangle:AREA, file:PATH, disk:K:AREA, randsym:PAIRS:AREA[:SEED],
  // randpoly:K:AREA[:SEED]. Throws std::invalid_argument.
  static BodySpec parse(const std::string& descriptor);
  std::string describe() const;
};

// Throws PolygonFormatError for unreadable files, std::invalid_argument for
// invalid specs.
ConvexPolygon realize(const BodySpec& spec);

bool is_symmetric(const ConvexPolygon& p);

// Homothety about the origin onto area `a` (> 0).
ConvexPolygon normalize_area(const ConvexPolygon& p, double a);

ConvexPolygon regular_polygon(int k, double circumradius = 1.0, double phase = 0.0);

// Vertices at sorted random angles on a random ellipse (axis ratio in
// [1/3, 1]), so the vertex count is exact. Symmetric variants put the pairs
// at antipodal angles; the general variant is shifted by a random offset
// that keeps the origin interior.
ConvexPolygon random_ellipse_polygon(int vertices, std::uint64_t seed, std::uint64_t index,
                                     bool symmetric);

}  // namespace stochgeo
