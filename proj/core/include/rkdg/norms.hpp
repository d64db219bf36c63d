#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rkdg/dg_function.hpp"

namespace rkdg {

/// ||f||_{L2}; exact via orthonormality (sum of squared coefficients).
double l2_norm(const DGFunction& f);
/// L2 norm restricted to the components flagged in `mask`.
double l2_norm(const DGFunction& f, const std::vector<bool>& mask);

/// ||f - g||_{L2} with g evaluated by Gauss quadrature (q + 3 points per
/// element unless `num_points` is given).
double l2_distance(const DGFunction& f, const PointFunction& g,
                   int num_points = 0);
/// Component-wise ||f_c - g_c||_{L2}.
State l2_distance_components(const DGFunction& f, const PointFunction& g,
                             int num_points = 0);

/// max_n values[n]; the L-infinity-in-time norm sampled at the time nodes.
double linf_over_times(std::span<const double> values);

/// int_{t_0}^{t_N} |value(t)| dt by composite Gauss with `points_per_step`
/// nodes inside every [t_n, t_{n+1}].
double l1_in_time(const std::function<double(double)>& value,
                  std::span<const double> times, int points_per_step);
/// (int value(t)^2 dt)^{1/2}, same quadrature.
double l2_in_time(const std::function<double(double)>& value,
                  std::span<const double> times, int points_per_step);

}  // namespace rkdg
