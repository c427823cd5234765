#pragma once

#include <vector>

#include "stochgeo/geom2.hpp"

namespace stochgeo {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

struct TriangleRule {
  std::vector<double> u, v, w;  // barycentric (1-u-v, u, v) with weights summing to 1/2
};

// Collapsed (Duffy) tensor rule, exact for polynomials of total degree
// <= 2n - 2 on the reference triangle.
TriangleRule collapsed_triangle_rule(int n);

// Integral of f over triangle (a, b, c).
template <class F>
double integrate_triangle(const TriangleRule& rule, Point2 a, Point2 b, Point2 c, F&& f) {
  const double jac = std::abs(cross(b - a, c - a));
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.w.size(); ++k) {
    acc += rule.w[k] * f(a + rule.u[k] * (b - a) + rule.v[k] * (c - a));
  }
  return acc * jac;
}

}  // namespace stochgeo
