#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rkdg/dg_function.hpp"

namespace rkdg {

/// Spatial integrand of the dG energy norm at a fixed time:
///   sum_j ||d_x v||^2_{L2(I_j)} + sum_i h_i^{-1} |[v]_i|^2,
/// restricted to components with mask set (all when mask is empty).
double energy_integrand(const DGFunction& v, const std::vector<bool>& mask = {});

/// Same integrand for v - g with g continuous, given only d_x g:
///   sum_j ||d_x g - d_x v||^2 + sum_i h_i^{-1} |[v]_i|^2.
double energy_integrand_against(const DGFunction& v, const PointFunction& g_dx,
                                const std::vector<bool>& mask = {},
                                int num_points = 0);

/// (int_{t_0}^{t_N} energy_integrand(v(t)) dt)^{1/2} with a composite Gauss
/// rule of `points_per_step` nodes on each [t_n, t_{n+1}].
double dg_energy_norm(const std::function<DGFunction(double)>& v,
                      std::span<const double> times, int points_per_step,
                      const std::vector<bool>& mask = {});

}  // namespace rkdg
