#pragma once

#include <vector>

namespace rkdg {

/// Quadrature rule on the reference interval [-1, 1].
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};

/// n-point Gauss-Legendre rule; exact for polynomials of degree <= 2n - 1.
QuadratureRule gauss_legendre(int n);

/// Composite Gauss rule over [a, b] split at the given breakpoints, returned
/// in physical coordinates (weights include the Jacobian).
struct PhysicalRule {
  std::vector<double> points;
  std::vector<double> weights;
};
PhysicalRule composite_gauss(const std::vector<double>& breakpoints, int n);

}  // namespace rkdg
