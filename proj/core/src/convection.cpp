#include "rkdg/convection.hpp"

#include <cmath>
#include <stdexcept>

namespace rkdg {

ConvectionOperator::ConvectionOperator(int degree, FluxScheme scheme,
                                       FluxFunction flux)
    : ref_(degree, degree + 3), scheme_(scheme), flux_(std::move(flux)) {}

DGFunction ConvectionOperator::apply(const DGFunction& u) const {
  if (u.degree() != ref_.degree) {
    throw std::invalid_argument("ConvectionOperator: degree mismatch");
  }
  const Mesh1D& mesh = u.mesh();
  const std::size_t m = mesh.num_elements();
  const int nb = u.num_basis();
  const int nc = u.components();
  DGFunction out(u.mesh_ptr(), u.degree(), nc);

  for (std::size_t k = 0; k < m; ++k) {
    const double inv_sqrt_h = 1.0 / std::sqrt(mesh.element_size(k));
    for (std::size_t g = 0; g < ref_.rule.size(); ++g) {
      State val = State::Zero(nc);
      for (int j = 0; j < nb; ++j) {
        for (int c = 0; c < nc; ++c) val[c] += u(k, j, c) * ref_.values[g][j];
      }
      val *= inv_sqrt_h;
      const State fv = flux_.value(val);
      // (h/2) w_g f . dphi_j = (h/2) w_g f s_j P_j' 2/h^{3/2} = w_g f s_j P_j' / sqrt(h)
      const double w = ref_.rule.weights[g] * inv_sqrt_h;
      for (int j = 0; j < nb; ++j) {
        for (int c = 0; c < nc; ++c) out(k, j, c) -= w * fv[c] * ref_.derivs[g][j];
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t left_el = (i + m - 1) % m;
    const State a = u.value_at(left_el, 1.0);
    const State b = u.value_at(i, -1.0);
    const State flux = numerical_flux(a, b, scheme_, flux_);
    const double sl = 1.0 / std::sqrt(mesh.element_size(left_el));
    const double sr = 1.0 / std::sqrt(mesh.element_size(i));
    // [psi]_i = psi(x_i^-) - psi(x_i^+)
    for (int j = 0; j < nb; ++j) {
      for (int c = 0; c < nc; ++c) {
        out(left_el, j, c) += flux[c] * ref_.right_values[j] * sl;
        out(i, j, c) -= flux[c] * ref_.left_values[j] * sr;
      }
    }
  }
  return out;
}

DGFunction apply_fh(const DGFunction& u, const FluxScheme& scheme,
                    const FluxFunction& flux) {
  return ConvectionOperator(u.degree(), scheme, flux).apply(u);
}

}  // namespace rkdg
