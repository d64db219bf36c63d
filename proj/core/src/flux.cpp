#include "rkdg/flux.hpp"

#include <cmath>
#include <stdexcept>

namespace rkdg {

FluxScheme::FluxScheme(Kind k, double l) : kind(k), lambda(l) {
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw std::invalid_argument("FluxScheme: lambda must be finite and positive");
  }
}

FluxScheme::Kind parse_flux_kind(const std::string& name) {
  if (name == "lw" || name == "lax-wendroff" || name == "LaxWendroff") {
    return FluxScheme::Kind::LaxWendroff;
  }
  if (name == "lf" || name == "lax-friedrichs" || name == "LaxFriedrichs") {
    return FluxScheme::Kind::LaxFriedrichs;
  }
  throw std::invalid_argument("unknown flux scheme '" + name + "'");
}

std::string to_string(FluxScheme::Kind kind) {
  return kind == FluxScheme::Kind::LaxWendroff ? "lax-wendroff"
                                               : "lax-friedrichs";
}

State flux_w(const State& a, const State& b, const FluxScheme& scheme,
             const FluxFunction& f) {
  State w = 0.5 * (a + b);
  if (scheme.kind == FluxScheme::Kind::LaxWendroff) {
    w -= (0.5 * scheme.lambda) * (f.value(b) - f.value(a));
  }
  return w;
}

State numerical_flux(const State& a, const State& b, const FluxScheme& scheme,
                     const FluxFunction& f) {
  if (scheme.kind == FluxScheme::Kind::LaxWendroff) {
    return f.value(flux_w(a, b, scheme, f));
  }
  return 0.5 * (f.value(a) + f.value(b)) - scheme.lambda * (b - a);
}

std::pair<Jacobian, Jacobian> flux_w_derivatives(const State& a, const State& b,
                                                 const FluxScheme& scheme,
                                                 const FluxFunction& f) {
  const auto m = a.size();
  Jacobian da = 0.5 * Jacobian::Identity(m, m);
  Jacobian db = da;
  if (scheme.kind == FluxScheme::Kind::LaxWendroff) {
    da += (0.5 * scheme.lambda) * f.jacobian(a);
    db -= (0.5 * scheme.lambda) * f.jacobian(b);
  }
  return {da, db};
}

}  // namespace rkdg
