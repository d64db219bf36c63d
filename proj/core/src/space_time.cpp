#include "rkdg/space_time.hpp"

namespace rkdg {
namespace {

// u^{ts} is continuous, so any side is fine at a node.
Side continuous_side(const Mesh1D& mesh, double x) {
  return mesh.node_index(x) >= 0 ? Side::Right : Side::Interior;
}

}  // namespace

SpaceTimeReconstruction::SpaceTimeReconstruction(
    const TemporalReconstruction& temporal, SpatialReconstructor spatial)
    : temporal_(&temporal), spatial_(std::move(spatial)) {}

ReconstructionSnapshot SpaceTimeReconstruction::snapshot(double t) const {
  ReconstructionSnapshot s;
  s.time = t;
  s.temporal = temporal_->value(t);
  s.temporal_dt = temporal_->time_derivative(t);
  s.st = spatial_.reconstruct(s.temporal);
  s.st_dt = spatial_.reconstruct_dt(s.temporal, s.temporal_dt);
  return s;
}

State SpaceTimeReconstruction::eval_st(double t, double x) const {
  const DGFunction st = spatial_.reconstruct(temporal_->value(t));
  return st.evaluate(x, continuous_side(st.mesh(), x));
}

State SpaceTimeReconstruction::eval_st_dx(double t, double x) const {
  const DGFunction st = spatial_.reconstruct(temporal_->value(t));
  return st.evaluate_dx(x, continuous_side(st.mesh(), x));
}

State SpaceTimeReconstruction::eval_st_dt(double t, double x) const {
  const DGFunction st_dt =
      spatial_.reconstruct_dt(temporal_->value(t), temporal_->time_derivative(t));
  return st_dt.evaluate(x, continuous_side(st_dt.mesh(), x));
}

}  // namespace rkdg
