#pragma once

#include <array>
#include <span>
#include <vector>

#include "rkdg/dg_function.hpp"
#include "rkdg/simulation.hpp"

namespace rkdg {

/// Piecewise cubic-in-time Hermite interpolant of (u_h^n, rhs^n) pairs.
///
/// On [t_n, t_{n+1}] the reconstruction is sum_k c_k (t - t_n)^k with
/// DGFunction coefficients; it matches u_h^j and d/dt = rhs^j at both ends,
/// so it is continuous in time and Lipschitz.
class TemporalReconstruction {
 public:
  explicit TemporalReconstruction(const Trajectory& traj);

  DGFunction value(double t) const;
  DGFunction time_derivative(double t) const;

  std::span<const double> times() const { return times_; }
  std::size_t num_intervals() const { return coeffs_.size(); }
  /// Interval containing t; node times map to the interval they start
  /// (the last node maps to the last interval).
  std::size_t interval_of(double t) const;
  const std::array<DGFunction, 4>& coefficients(std::size_t n) const {
    return coeffs_[n];
  }

 private:
  std::vector<double> times_;
  std::vector<std::array<DGFunction, 4>> coeffs_;
  DGFunction final_value_;
  DGFunction final_derivative_;
};

inline TemporalReconstruction temporal_reconstruct(const Trajectory& traj) {
  return TemporalReconstruction(traj);
}

}  // namespace rkdg
