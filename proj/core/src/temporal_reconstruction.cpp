#include "rkdg/temporal_reconstruction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rkdg {

TemporalReconstruction::TemporalReconstruction(const Trajectory& traj)
    : times_(traj.times) {
  if (traj.times.size() < 2) {
    throw std::invalid_argument("TemporalReconstruction: need at least two states");
  }
  if (traj.rhs.size() != traj.states.size()) {
    throw std::invalid_argument("TemporalReconstruction: trajectory lacks cached rhs");
  }
  coeffs_.reserve(traj.num_steps());
  for (std::size_t n = 0; n < traj.num_steps(); ++n) {
    const double tau = traj.times[n + 1] - traj.times[n];
    const DGFunction& u0 = traj.states[n];
    const DGFunction& u1 = traj.states[n + 1];
    const DGFunction& d0 = traj.rhs[n];
    const DGFunction& d1 = traj.rhs[n + 1];
    // c2 = (3 (u1 - u0) / tau - 2 d0 - d1) / tau
    // c3 = (2 (u0 - u1) / tau + d0 + d1) / tau^2
    DGFunction diff = u1 - u0;
    DGFunction c2 = (3.0 / (tau * tau)) * diff;
    c2.axpy(-2.0 / tau, d0).axpy(-1.0 / tau, d1);
    DGFunction c3 = (-2.0 / (tau * tau * tau)) * diff;
    c3.axpy(1.0 / (tau * tau), d0).axpy(1.0 / (tau * tau), d1);
    coeffs_.push_back({u0, d0, std::move(c2), std::move(c3)});
  }
  final_value_ = traj.states.back();
  final_derivative_ = traj.rhs.back();
}

std::size_t TemporalReconstruction::interval_of(double t) const {
  const double span = times_.back() - times_.front();
  const double tol = 1e-12 * span;
  if (t < times_.front() - tol || t > times_.back() + tol) {
    throw std::out_of_range("TemporalReconstruction: t=" + std::to_string(t) +
                            " outside [t_0, t_N]");
  }
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - times_.begin() - 1, 0));
  return std::min(idx, coeffs_.size() - 1);
}

DGFunction TemporalReconstruction::value(double t) const {
  const std::size_t n = interval_of(t);
  if (t == times_.back()) return final_value_;
  const double s = t - times_[n];
  const auto& c = coeffs_[n];
  if (s == 0.0) return c[0];
  DGFunction out = c[3];
  out *= s;
  out += c[2];
  out *= s;
  out += c[1];
  out *= s;
  out += c[0];
  return out;
}

DGFunction TemporalReconstruction::time_derivative(double t) const {
  const std::size_t n = interval_of(t);
  if (t == times_.back()) return final_derivative_;
  const double s = t - times_[n];
  const auto& c = coeffs_[n];
  if (s == 0.0) return c[1];
  DGFunction out = c[3];
  out *= 3.0 * s;
  out.axpy(2.0, c[2]);
  out *= s;
  out += c[1];
  return out;
}

}  // namespace rkdg
