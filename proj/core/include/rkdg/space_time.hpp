#pragma once

#include "rkdg/spatial_reconstruction.hpp"
#include "rkdg/temporal_reconstruction.hpp"

namespace rkdg {

/// Everything the estimators need at one time instant.
struct ReconstructionSnapshot {
  double time = 0.0;
  DGFunction temporal;     ///< u_h^t(t), degree q
  DGFunction temporal_dt;  ///< d/dt u_h^t(t)
  DGFunction st;           ///< u^{ts}(t), degree q + 1, continuous
  DGFunction st_dt;        ///< d/dt u^{ts}(t) by the chain rule
};

/// Space-time reconstruction u^{ts}(t) = R(u_h^t(t)) with R the spatial
/// lift. Holds a reference to the temporal reconstruction.
class SpaceTimeReconstruction {
 public:
  SpaceTimeReconstruction(const TemporalReconstruction& temporal,
                          SpatialReconstructor spatial);

  ReconstructionSnapshot snapshot(double t) const;

  State eval_st(double t, double x) const;
  State eval_st_dx(double t, double x) const;
  State eval_st_dt(double t, double x) const;

  const TemporalReconstruction& temporal() const { return *temporal_; }
  const SpatialReconstructor& spatial() const { return spatial_; }

 private:
  const TemporalReconstruction* temporal_;
  SpatialReconstructor spatial_;
};

}  // namespace rkdg
