#pragma once

#include <vector>

#include "rkdg/tableau.hpp"

namespace rkdg {

/// y += a * x; specialised for types with an in-place axpy.
template <typename S>
void accumulate(S& y, double a, const S& x) {
  if constexpr (requires { y.axpy(a, x); }) {
    y.axpy(a, x);
  } else {
    y += a * x;
  }
}

/// One additive Runge-Kutta step for y' = E(y, t) + I(y).
///
///   explicit_rhs(y, t) -> S        nonstiff part, evaluated at c_ex times
///   implicit_rhs(y)    -> S        stiff linear part
///   implicit_solve(c, b) -> S      solves (Id - c I) x = b
template <typename S, typename Explicit, typename Implicit, typename Solve>
S imex_advance(const S& y, double t, double tau, const ImexTableau& tab,
               Explicit&& explicit_rhs, Implicit&& implicit_rhs,
               Solve&& implicit_solve) {
  const int s = tab.stages();
  std::vector<S> ex, im;
  ex.reserve(s);
  im.reserve(s);
  for (int i = 0; i < s; ++i) {
    S stage = y;
    for (int j = 0; j < i; ++j) {
      if (tab.a_ex(i, j) != 0.0) accumulate(stage, tau * tab.a_ex(i, j), ex[j]);
      if (tab.a_im(i, j) != 0.0) accumulate(stage, tau * tab.a_im(i, j), im[j]);
    }
    if (tab.a_im(i, i) != 0.0) stage = implicit_solve(tau * tab.a_im(i, i), stage);
    ex.push_back(explicit_rhs(stage, t + tab.c_ex[i] * tau));
    im.push_back(implicit_rhs(stage));
  }
  S out = y;
  for (int i = 0; i < s; ++i) {
    if (tab.b_ex[i] != 0.0) accumulate(out, tau * tab.b_ex[i], ex[i]);
    if (tab.b_im[i] != 0.0) accumulate(out, tau * tab.b_im[i], im[i]);
  }
  return out;
}

}  // namespace rkdg
