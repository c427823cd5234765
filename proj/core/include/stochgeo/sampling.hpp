#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stochgeo/geom2.hpp"
#include "stochgeo/philox.hpp"

namespace stochgeo {

/// Random values for one logical sample. Draw `k` of stream
/// (master_seed, sample_index, stream_id) is a pure function of those four
/// numbers, so results never depend on how work is split across threads.
struct SeededStream {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
  // Separates unrelated consumers that share a seed (points, test fixtures, ...).
  std::uint32_t stream_id = 0;

  double uniform(std::uint32_t draw) const {
    const Philox4x32::Counter ctr{static_cast<std::uint32_t>(sample_index),
                                  static_cast<std::uint32_t>(sample_index >> 32), draw / 2,
                                  stream_id};
    const Philox4x32::Key key{static_cast<std::uint32_t>(master_seed),
                              static_cast<std::uint32_t>(master_seed >> 32)};
    const auto out = Philox4x32::generate(ctr, key);
    return (draw % 2 == 0) ? to_unit_open(out[0], out[1]) : to_unit_open(out[2], out[3]);
  }
};

// Fan triangulation from vertex 0 with a cumulative area table.
class Triangulation {
 public:
  explicit Triangulation(const ConvexPolygon& polygon);

  std::size_t triangle_count() const { return cumulative_.size(); }
  double total_area() const { return cumulative_.back(); }
  double triangle_area(std::size_t i) const;
  // Index of the triangle whose cumulative slot contains u * total_area.
  std::size_t locate(double u) const;
  Point2 apex() const { return apex_; }
  Point2 left(std::size_t i) const { return rim_[i]; }
  Point2 right(std::size_t i) const { return rim_[i + 1]; }

 private:
  Point2 apex_;
  std::vector<Point2> rim_;
  std::vector<double> cumulative_;
};

/// Uniform sampler over one polygon. Each point consumes three draws:
/// triangle choice, then (u, v) through (s, t) = (1 - sqrt(u), v sqrt(u)).
class PolygonSampler {
 public:
  explicit PolygonSampler(const ConvexPolygon& polygon) : tri_(polygon) {}

  Point2 operator()(const SeededStream& stream) const;
  const Triangulation& triangulation() const { return tri_; }

  // N points for logical sample `sample_index`: point j uses stream index
  // sample_index * N + j.
  std::vector<Point2> sample_matrix(std::size_t n_points, std::uint64_t master_seed,
                                    std::uint64_t sample_index) const;
  void sample_matrix(std::span<Point2> out, std::uint64_t master_seed,
                     std::uint64_t sample_index) const;

 private:
  Triangulation tri_;
};

Point2 uniform_in_polygon(const ConvexPolygon& polygon, const SeededStream& stream);

std::vector<Point2> sample_matrix(const ConvexPolygon& polygon, std::size_t n_points,
                                  std::uint64_t master_seed, std::uint64_t sample_index);

}  // namespace stochgeo
