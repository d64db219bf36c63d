#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rkdg/flux.hpp"
#include "rkdg/mesh.hpp"
#include "rkdg/state.hpp"

namespace rkdg {

/// Which a posteriori bound applies.
enum class ProblemClass {
  LinearScalar,
  NonlinearScalar,
  LinearSystem,
  LinearWave,
  NonlinearWave,
};

std::string to_string(ProblemClass c);
ProblemClass parse_problem_class(const std::string& name);

using SpaceTimeFunction = std::function<State(double t, double x)>;

/// Potential W of the p-system u_t - v_x = 0, v_t - W'(u)_x = eps v_xx,
/// with derivatives up to third order.
struct WavePotential {
  std::function<double(double)> W, dW, d2W, d3W;
};

/// u_t + f(u)_x = eps diag(mask) u_xx + source on a periodic interval.
struct ProblemSpec {
  std::string id;
  ProblemClass problem_class = ProblemClass::LinearScalar;
  int components = 1;
  Interval domain;
  FluxFunction flux;
  /// Second derivative of flux component i: d^2 f_i / du^2.
  std::function<Jacobian(const State&, int)> flux_hessian;
  double epsilon = 0.0;
  std::vector<bool> diffusion_mask;
  std::function<State(double)> initial;
  SpaceTimeFunction exact;     ///< optional
  SpaceTimeFunction exact_dx;  ///< optional, required when exact is set
  SpaceTimeFunction source;    ///< optional
  std::optional<WavePotential> potential;

  bool has_exact() const { return static_cast<bool>(exact); }
  bool has_source() const { return static_cast<bool>(source); }

  /// Throws std::invalid_argument if the class tag contradicts the
  /// component count, diffusion mask or available data.
  void validate() const;
};

ProblemSpec linear_advection_diffusion(double epsilon);
ProblemSpec viscous_burgers(double epsilon);
/// gamma defaults to 1.4.
ProblemSpec nonlinear_wave(double epsilon, double gamma = 1.4);

/// Built-in problems by id: "linear", "burgers", "wave".
ProblemSpec make_problem(const std::string& id, double epsilon);
std::vector<std::string> builtin_problem_ids();

/// Oracle checks used by tests and the `validate` subcommand.
struct ProblemCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error <= tolerance; }
};

/// Central-difference check of Df (and D^2 f) against f on random states
/// drawn around the exact solution's range.
ProblemCheck check_flux_derivatives(const ProblemSpec& p, int samples,
                                    unsigned seed);
/// Residual of the exact solution in the forced PDE via central finite
/// differences (step 1e-4), at random space-time points in [0, T] x domain.
ProblemCheck check_manufactured_source(const ProblemSpec& p, int samples,
                                       double final_time, unsigned seed);
/// |exact(t, lo) - exact(t, hi)| over sample times.
ProblemCheck check_periodicity(const ProblemSpec& p, int samples,
                               double final_time);

std::vector<ProblemCheck> validate_problem(const ProblemSpec& p,
                                           double final_time = 0.5);

}  // namespace rkdg
