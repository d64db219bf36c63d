#pragma once

#include <vector>

#include "rkdg/dg_function.hpp"
#include "rkdg/flux.hpp"

namespace rkdg {

/// Flux-consistent continuous lift of a V_q function into V_{q+1}.
///
/// On each element the degree-(q+1) result keeps the moments of v against
/// the orthonormal basis of degree <= q - 1 and takes the value
/// w(v(x_k^-), v(x_k^+)) at both element ends. With an orthonormal basis
/// the moment conditions fix the first q coefficients outright; the last
/// two solve a 2x2 endpoint system whose determinant is nonzero for every q.
class SpatialReconstructor {
 public:
  SpatialReconstructor(FluxScheme scheme, FluxFunction flux);

  /// Degree q+1, globally continuous. Requires q >= 1.
  DGFunction reconstruct(const DGFunction& v) const;

  /// Time derivative of reconstruct(v(t)) given v and dv/dt: the lift is
  /// linear in its moment and endpoint data, so it is applied to
  /// (dv/dt moments, dw/da a' + dw/db b').
  DGFunction reconstruct_dt(const DGFunction& v, const DGFunction& v_dt) const;

  /// Lift given moment data (degree-q DGFunction; only coefficients with
  /// index < q are used) and one interface value per periodic node.
  DGFunction lift(const DGFunction& moments,
                  const std::vector<State>& node_values) const;

  /// w(v(x_i^-), v(x_i^+)) at every node.
  std::vector<State> interface_values(const DGFunction& v) const;

  const FluxScheme& scheme() const { return scheme_; }
  const FluxFunction& flux() const { return flux_; }

 private:
  FluxScheme scheme_;
  FluxFunction flux_;
};

}  // namespace rkdg
