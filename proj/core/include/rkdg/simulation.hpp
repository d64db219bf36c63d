#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkdg/convection.hpp"
#include "rkdg/diffusion.hpp"
#include "rkdg/dg_function.hpp"
#include "rkdg/problem.hpp"
#include "rkdg/tableau.hpp"

namespace rkdg {

/// The spatially discrete system du/dt = -f_h(u) + eps A_h(u) + P s(t).
class SemiDiscreteSystem {
 public:
  SemiDiscreteSystem(const ProblemSpec& problem,
                     std::shared_ptr<const Mesh1D> mesh, int degree,
                     FluxScheme scheme, double sigma);

  /// -f_h(u) + P source(t)
  DGFunction explicit_rhs(const DGFunction& u, double t) const;
  /// eps A_h(u) on diffusing components.
  DGFunction implicit_rhs(const DGFunction& u) const;
  /// A_h(u) without eps.
  DGFunction diffusion(const DGFunction& u) const;
  DGFunction full_rhs(const DGFunction& u, double t) const;
  /// L2 projection of the source at time t (zero when there is none).
  DGFunction projected_source(double t) const;

  const ProblemSpec& problem() const { return *problem_; }
  const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }
  int degree() const { return degree_; }
  const ConvectionOperator& convection() const { return convection_; }
  const SipOperator& sip() const { return sip_; }
  const DiffusionConfig& diffusion_config() const { return diff_; }
  const FluxScheme& scheme() const { return convection_.scheme(); }

 private:
  const ProblemSpec* problem_;
  std::shared_ptr<const Mesh1D> mesh_;
  int degree_;
  ConvectionOperator convection_;
  SipOperator sip_;
  DiffusionConfig diff_;
};

/// Raised when a state turns NaN/Inf.
class DivergedError : public std::runtime_error {
 public:
  DivergedError(std::size_t step, double time);
  std::size_t step() const { return step_; }
  double time() const { return time_; }

 private:
  std::size_t step_;
  double time_;
};

/// Advance one IMEX step. Stage systems (Id - tau a_ii eps A_h) are solved
/// directly by `solver`.
DGFunction imex_step(const DGFunction& u, double t, double tau,
                     const ImexTableau& tableau,
                     const SemiDiscreteSystem& system,
                     ImplicitDiffusionSolver& solver);

/// Discrete solution u_h^0..u_h^N with the cached right-hand sides
/// -f_h(u_h^n) + eps A_h(u_h^n) + P s(t_n) used by the temporal
/// reconstruction.
struct Trajectory {
  std::vector<double> times;
  std::vector<DGFunction> states;
  std::vector<DGFunction> rhs;
  /// Whether the last step was shortened to land on T.
  bool final_step_truncated = false;
  double nominal_dt = 0.0;

  std::size_t num_steps() const { return times.empty() ? 0 : times.size() - 1; }
  /// Throws std::logic_error if the invariants are violated.
  void validate() const;
};

struct SimulationOptions {
  FluxScheme::Kind flux = FluxScheme::Kind::LaxWendroff;
  /// Defaults to dt / h_min.
  std::optional<double> lambda;
  /// Defaults to 10 q^2.
  std::optional<double> sigma;
};

/// Resolved runtime parameters of a run.
struct SimulationParameters {
  double dt = 0.0;
  double lambda = 0.0;
  double sigma = 0.0;
};

SimulationParameters resolve_parameters(const Mesh1D& mesh, int degree,
                                        double dt_factor,
                                        const SimulationOptions& options);

/// Integrate from u_h(0) = P u_0 to T with dt = dt_factor * h; the final
/// step is truncated to hit T exactly.
Trajectory run_simulation(const ProblemSpec& problem,
                          const std::shared_ptr<const Mesh1D>& mesh, int degree,
                          const ImexTableau& tableau, double dt_factor,
                          double final_time,
                          const SimulationOptions& options = {});

/// Same, with an explicit system (operators already configured).
Trajectory run_simulation(const SemiDiscreteSystem& system,
                          const ImexTableau& tableau, double dt,
                          double final_time);

/// Per-component integral of f over the domain.
State integral(const DGFunction& f);

}  // namespace rkdg
