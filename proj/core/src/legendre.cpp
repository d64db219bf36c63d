#include "rkdg/legendre.hpp"

#include <stdexcept>

namespace rkdg {

std::pair<double, double> legendre_value_and_derivative(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  double d_prev = 0.0;
  double d = 1.0;
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    // P'_{k+1} = P'_{k-1} + (2k+1) P_k, valid at the endpoints as well.
    const double d_next = d_prev + (2.0 * k + 1.0) * p;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

void legendre_all(int n, double x, std::span<double> values,
                  std::span<double> derivs) {
  values[0] = 1.0;
  if (!derivs.empty()) derivs[0] = 0.0;
  if (n == 0) return;
  values[1] = x;
  if (!derivs.empty()) derivs[1] = 1.0;
  for (int k = 1; k < n; ++k) {
    values[k + 1] =
        ((2.0 * k + 1.0) * x * values[k] - k * values[k - 1]) / (k + 1.0);
    if (!derivs.empty()) {
      derivs[k + 1] = derivs[k - 1] + (2.0 * k + 1.0) * values[k];
    }
  }
}

ReferenceElement::ReferenceElement(int deg, int num_points)
    : degree(deg), rule(gauss_legendre(num_points)) {
  if (deg < 0) throw std::invalid_argument("ReferenceElement: negative degree");
  const int nb = deg + 1;
  std::vector<double> v(nb), d(nb);
  auto normalise = [nb](std::vector<double>& a) {
    for (int j = 0; j < nb; ++j) a[j] *= basis_scale(j);
  };
  values.reserve(rule.size());
  derivs.reserve(rule.size());
  for (double xi : rule.points) {
    legendre_all(deg, xi, v, d);
    normalise(v);
    normalise(d);
    values.push_back(v);
    derivs.push_back(d);
  }
  legendre_all(deg, -1.0, v, d);
  normalise(v);
  normalise(d);
  left_values = v;
  left_derivs = d;
  legendre_all(deg, 1.0, v, d);
  normalise(v);
  normalise(d);
  right_values = v;
  right_derivs = d;
}

}  // namespace rkdg
