#include "stochgeo/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace stochgeo {

Triangulation::Triangulation(const ConvexPolygon& polygon) : apex_(polygon[0]) {
  rim_.assign(polygon.vertices().begin() + 1, polygon.vertices().end());
  cumulative_.reserve(rim_.size() - 1);
  double running = 0.0;
  for (std::size_t i = 0; i + 1 < rim_.size(); ++i) {
    running += 0.5 * cross(rim_[i] - apex_, rim_[i + 1] - apex_);
    cumulative_.push_back(running);
  }
}

double Triangulation::triangle_area(std::size_t i) const {
  return i == 0 ? cumulative_[0] : cumulative_[i] - cumulative_[i - 1];
}

std::size_t Triangulation::locate(double u) const {
  const double target = u * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                               cumulative_.size() - 1);
}

Point2 PolygonSampler::operator()(const SeededStream& stream) const {
  const std::size_t cell = tri_.locate(stream.uniform(0));
  const double root = std::sqrt(stream.uniform(1));
  const double t = stream.uniform(2) * root;
  // Barycentric weights (1 - root, root - t, t), written relative to the apex.
  const Point2 a = tri_.apex(), b = tri_.left(cell), c = tri_.right(cell);
  return a + (root - t) * (b - a) + t * (c - a);
}

void PolygonSampler::sample_matrix(std::span<Point2> out, std::uint64_t master_seed,
                                   std::uint64_t sample_index) const {
  const std::uint64_t base = sample_index * out.size();
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (*this)(SeededStream{master_seed, base + j});
  }
}

std::vector<Point2> PolygonSampler::sample_matrix(std::size_t n_points, std::uint64_t master_seed,
                                                  std::uint64_t sample_index) const {
  std::vector<Point2> out(n_points);
  sample_matrix(out, master_seed, sample_index);
  return out;
}

Point2 uniform_in_polygon(const ConvexPolygon& polygon, const SeededStream& stream) {
  return PolygonSampler(polygon)(stream);
}

std::vector<Point2> sample_matrix(const ConvexPolygon& polygon, std::size_t n_points,
                                  std::uint64_t master_seed, std::uint64_t sample_index) {
  return PolygonSampler(polygon).sample_matrix(n_points, master_seed, sample_index);
}

}  // namespace stochgeo
