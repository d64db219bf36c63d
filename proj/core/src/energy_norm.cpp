#include "rkdg/energy_norm.hpp"

#include <cmath>

#include "rkdg/norms.hpp"
#include "rkdg/quadrature.hpp"

namespace rkdg {
namespace {

bool active(const std::vector<bool>& mask, int c) {
  return mask.empty() || mask[c];
}

double jump_part(const DGFunction& v, const std::vector<bool>& mask) {
  const Mesh1D& mesh = v.mesh();
  double sum = 0.0;
  for (std::size_t i = 0; i < mesh.num_elements(); ++i) {
    const State jump = v.trace(i, Side::Left) - v.trace(i, Side::Right);
    for (int c = 0; c < v.components(); ++c) {
      if (active(mask, c)) sum += jump[c] * jump[c] / mesh.node_size(i);
    }
  }
  return sum;
}

}  // namespace

double energy_integrand(const DGFunction& v, const std::vector<bool>& mask) {
  const QuadratureRule rule = gauss_legendre(v.degree() + 2);
  const Mesh1D& mesh = v.mesh();
  double sum = 0.0;
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const double jac = 0.5 * mesh.element_size(k);
    for (std::size_t g = 0; g < rule.size(); ++g) {
      const State d = v.derivative_at(k, rule.points[g]);
      for (int c = 0; c < v.components(); ++c) {
        if (active(mask, c)) sum += jac * rule.weights[g] * d[c] * d[c];
      }
    }
  }
  return sum + jump_part(v, mask);
}

double energy_integrand_against(const DGFunction& v, const PointFunction& g_dx,
                                const std::vector<bool>& mask, int num_points) {
  const QuadratureRule rule =
      gauss_legendre(num_points > 0 ? num_points : v.degree() + 3);
  const Mesh1D& mesh = v.mesh();
  double sum = 0.0;
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const double jac = 0.5 * mesh.element_size(k);
    for (std::size_t g = 0; g < rule.size(); ++g) {
      const double xi = rule.points[g];
      const State d = g_dx(mesh.from_reference(k, xi)) - v.derivative_at(k, xi);
      for (int c = 0; c < v.components(); ++c) {
        if (active(mask, c)) sum += jac * rule.weights[g] * d[c] * d[c];
      }
    }
  }
  return sum + jump_part(v, mask);
}

double dg_energy_norm(const std::function<DGFunction(double)>& v,
                      std::span<const double> times, int points_per_step,
                      const std::vector<bool>& mask) {
  return l2_in_time(
      [&](double t) { return std::sqrt(energy_integrand(v(t), mask)); }, times,
      points_per_step);
}

}  // namespace rkdg
