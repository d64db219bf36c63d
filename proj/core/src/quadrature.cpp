#include "rkdg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rkdg/legendre.hpp"

namespace rkdg {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  // Newton on P_n from the Chebyshev-like initial guess; roots are symmetric.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const auto [p, d] = legendre_value_and_derivative(n, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    dp = legendre_value_and_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = -x;
    rule.points[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  return rule;
}

PhysicalRule composite_gauss(const std::vector<double>& breakpoints, int n) {
  const QuadratureRule ref = gauss_legendre(n);
  PhysicalRule out;
  if (breakpoints.size() < 2) return out;
  out.points.reserve((breakpoints.size() - 1) * ref.size());
  out.weights.reserve(out.points.capacity());
  for (std::size_t s = 0; s + 1 < breakpoints.size(); ++s) {
    const double a = breakpoints[s];
    const double b = breakpoints[s + 1];
    const double half = 0.5 * (b - a);
    for (std::size_t g = 0; g < ref.size(); ++g) {
      out.points.push_back(0.5 * (a + b) + half * ref.points[g]);
      out.weights.push_back(half * ref.weights[g]);
    }
  }
  return out;
}

}  // namespace rkdg
