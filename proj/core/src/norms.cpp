#include "rkdg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rkdg/legendre.hpp"
#include "rkdg/quadrature.hpp"

namespace rkdg {

double l2_norm(const DGFunction& f) { return f.vector().norm(); }

double l2_norm(const DGFunction& f, const std::vector<bool>& mask) {
  if (static_cast<int>(mask.size()) != f.components()) {
    throw std::invalid_argument("l2_norm: mask size mismatch");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < f.num_elements(); ++k) {
    for (int j = 0; j < f.num_basis(); ++j) {
      for (int c = 0; c < f.components(); ++c) {
        if (mask[c]) sum += f(k, j, c) * f(k, j, c);
      }
    }
  }
  return std::sqrt(sum);
}

State l2_distance_components(const DGFunction& f, const PointFunction& g,
                             int num_points) {
  const QuadratureRule rule =
      gauss_legendre(num_points > 0 ? num_points : f.degree() + 3);
  const Mesh1D& mesh = f.mesh();
  State sum = State::Zero(f.components());
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const double jac = 0.5 * mesh.element_size(k);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double xi = rule.points[q];
      const State diff = f.value_at(k, xi) - g(mesh.from_reference(k, xi));
      sum += (jac * rule.weights[q]) * diff.cwiseAbs2();
    }
  }
  return sum.cwiseSqrt();
}

double l2_distance(const DGFunction& f, const PointFunction& g, int num_points) {
  return l2_distance_components(f, g, num_points).norm();
}

double linf_over_times(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return *std::max_element(values.begin(), values.end());
}

namespace {

template <typename Fn>
double integrate_steps(const Fn& integrand, std::span<const double> times,
                       int points_per_step) {
  if (points_per_step < 1) {
    throw std::invalid_argument("time quadrature needs at least one point");
  }
  const QuadratureRule rule = gauss_legendre(points_per_step);
  double sum = 0.0;
  for (std::size_t n = 0; n + 1 < times.size(); ++n) {
    const double a = times[n];
    const double b = times[n + 1];
    const double half = 0.5 * (b - a);
    for (std::size_t g = 0; g < rule.size(); ++g) {
      sum += half * rule.weights[g] * integrand(0.5 * (a + b) + half * rule.points[g]);
    }
  }
  return sum;
}

}  // namespace

double l1_in_time(const std::function<double(double)>& value,
                  std::span<const double> times, int points_per_step) {
  return integrate_steps([&](double t) { return std::abs(value(t)); }, times,
                         points_per_step);
}

double l2_in_time(const std::function<double(double)>& value,
                  std::span<const double> times, int points_per_step) {
  return std::sqrt(integrate_steps(
      [&](double t) {
        const double v = value(t);
        return v * v;
      },
      times, points_per_step));
}

}  // namespace rkdg
