#include "rkdg/spatial_reconstruction.hpp"

#include <cmath>
#include <stdexcept>

#include "rkdg/legendre.hpp"

namespace rkdg {

SpatialReconstructor::SpatialReconstructor(FluxScheme scheme, FluxFunction flux)
    : scheme_(scheme), flux_(std::move(flux)) {}

std::vector<State> SpatialReconstructor::interface_values(const DGFunction& v) const {
  const std::size_t m = v.num_elements();
  std::vector<State> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = flux_w(v.trace(i, Side::Left), v.trace(i, Side::Right), scheme_, flux_);
  }
  return out;
}

DGFunction SpatialReconstructor::lift(const DGFunction& moments,
                                      const std::vector<State>& node_values) const {
  const int q = moments.degree();
  if (q < 1) {
    throw std::invalid_argument("SpatialReconstructor: degree must be >= 1");
  }
  const std::size_t m = moments.num_elements();
  if (node_values.size() != m) {
    throw std::invalid_argument("SpatialReconstructor: need one value per node");
  }
  const int nc = moments.components();
  const Mesh1D& mesh = moments.mesh();
  DGFunction out(moments.mesh_ptr(), q + 1, nc);
  const double sign_q = (q % 2 == 0) ? 1.0 : -1.0;  // P_q(-1)

  for (std::size_t k = 0; k < m; ++k) {
    const double inv_sqrt_h = 1.0 / std::sqrt(mesh.element_size(k));
    const State& w_left = node_values[k];
    const State& w_right = node_values[(k + 1) % m];
    const double s_q = basis_scale(q) * inv_sqrt_h;
    const double s_q1 = basis_scale(q + 1) * inv_sqrt_h;
    for (int c = 0; c < nc; ++c) {
      double r_left = w_left[c];
      double r_right = w_right[c];
      double sign = 1.0;
      for (int j = 0; j < q; ++j) {
        const double coeff = moments(k, j, c);
        out(k, j, c) = coeff;
        const double s_j = basis_scale(j) * inv_sqrt_h;
        r_right -= coeff * s_j;
        r_left -= coeff * s_j * sign;
        sign = -sign;
      }
      // (-1)^q s_q p_q + (-1)^{q+1} s_{q+1} p_{q+1} = r_left
      //           s_q p_q +          s_{q+1} p_{q+1} = r_right
      out(k, q, c) = (r_right + sign_q * r_left) / (2.0 * s_q);
      out(k, q + 1, c) = (r_right - sign_q * r_left) / (2.0 * s_q1);
    }
  }
  return out;
}

DGFunction SpatialReconstructor::reconstruct(const DGFunction& v) const {
  return lift(v, interface_values(v));
}

DGFunction SpatialReconstructor::reconstruct_dt(const DGFunction& v,
                                                const DGFunction& v_dt) const {
  if (!v.same_space(v_dt)) {
    throw std::invalid_argument("reconstruct_dt: v and dv/dt differ in space");
  }
  const std::size_t m = v.num_elements();
  std::vector<State> dw(m);
  for (std::size_t i = 0; i < m; ++i) {
    const State a = v.trace(i, Side::Left);
    const State b = v.trace(i, Side::Right);
    const auto [da, db] = flux_w_derivatives(a, b, scheme_, flux_);
    dw[i] = da * v_dt.trace(i, Side::Left) + db * v_dt.trace(i, Side::Right);
  }
  return lift(v_dt, dw);
}

}  // namespace rkdg
