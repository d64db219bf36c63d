#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "rkdg/quadrature.hpp"

namespace rkdg {

/// (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre_value_and_derivative(int n, double x);

/// P_0..P_n at x written into `values` (and derivatives into `derivs` when
/// non-empty). Both spans must have length n + 1.
void legendre_all(int n, double x, std::span<double> values,
                  std::span<double> derivs = {});

/// Orthonormal Legendre basis on a physical element of size h:
///   phi_j(x) = sqrt((2j + 1) / h) P_j(xi),
/// so the element mass matrix is the identity. The helpers return the
/// h-independent factor sqrt(2j + 1) P_j(xi); callers scale by 1/sqrt(h)
/// for values and by 2/h^{3/2} for derivatives.
inline double basis_scale(int j) {
  return std::sqrt(2.0 * j + 1.0);
}

/// Basis tabulated at the nodes of a quadrature rule and at both reference
/// endpoints, for a fixed degree.
struct ReferenceElement {
  int degree = 0;
  QuadratureRule rule;
  /// Normalised values sqrt(2j+1) P_j(xi_g), indexed [g][j].
  std::vector<std::vector<double>> values;
  /// Normalised derivatives sqrt(2j+1) P_j'(xi_g), indexed [g][j].
  std::vector<std::vector<double>> derivs;
  std::vector<double> left_values, right_values;
  std::vector<double> left_derivs, right_derivs;

  ReferenceElement(int degree, int num_points);
  int num_basis() const { return degree + 1; }
};

}  // namespace rkdg
