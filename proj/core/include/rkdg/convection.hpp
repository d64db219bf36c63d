#pragma once

#include "rkdg/dg_function.hpp"
#include "rkdg/flux.hpp"
#include "rkdg/legendre.hpp"

namespace rkdg {

/// Discrete convection operator f_h: V_q -> V_q defined weakly by
///   (f_h(u), psi) = -(f(u), d_x psi) + sum_i F(u(x_i^-), u(x_i^+)) [psi]_i.
/// Volume integrals use a (q + 3)-point Gauss rule per element.
class ConvectionOperator {
 public:
  ConvectionOperator(int degree, FluxScheme scheme, FluxFunction flux);

  DGFunction apply(const DGFunction& u) const;

  const FluxScheme& scheme() const { return scheme_; }
  const FluxFunction& flux() const { return flux_; }

 private:
  ReferenceElement ref_;
  FluxScheme scheme_;
  FluxFunction flux_;
};

DGFunction apply_fh(const DGFunction& u, const FluxScheme& scheme,
                    const FluxFunction& flux);

}  // namespace rkdg
