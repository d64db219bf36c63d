#pragma once

#include <functional>
#include <string>
#include <utility>

#include "rkdg/state.hpp"

namespace rkdg {

/// Physical flux f: R^m -> R^m with its Jacobian Df.
struct FluxFunction {
  int components = 1;
  std::function<State(const State&)> value;
  std::function<Jacobian(const State&)> jacobian;
};

/// Interface flux of the form F(a, b) = f(w(a, b)) (Lax-Wendroff) or
/// F(a, b) = (f(a) + f(b)) / 2 - lambda (b - a) with w the arithmetic mean
/// (Lax-Friedrichs).
struct FluxScheme {
  enum class Kind { LaxWendroff, LaxFriedrichs };

  Kind kind = Kind::LaxWendroff;
  double lambda = 0.1;

  FluxScheme() = default;
  FluxScheme(Kind k, double l);
};

FluxScheme::Kind parse_flux_kind(const std::string& name);
std::string to_string(FluxScheme::Kind kind);

/// Intermediate state w(a, b).
State flux_w(const State& a, const State& b, const FluxScheme& scheme,
             const FluxFunction& f);

/// Numerical flux F(a, b).
State numerical_flux(const State& a, const State& b, const FluxScheme& scheme,
                     const FluxFunction& f);

/// Partial derivatives (dw/da, dw/db) as m x m matrices.
std::pair<Jacobian, Jacobian> flux_w_derivatives(const State& a, const State& b,
                                                 const FluxScheme& scheme,
                                                 const FluxFunction& f);

}  // namespace rkdg
