#pragma once

#include <utility>

#include "rkdg/problem.hpp"
#include "rkdg/simulation.hpp"
#include "rkdg/space_time.hpp"

namespace rkdg {

/// Norm inputs of the fully discrete bounds. Fields a class does not use
/// stay zero. All norms are unsquared.
struct BoundInputs {
  double epsilon = 0.0;
  double final_time = 0.0;
  double init_error = 0.0;   ///< ||u(0) - u^{ts}(0)||
  double r1 = 0.0;           ///< ||r1||_{L1(0,T;L2)}
  double theta = 0.0;        ///< ||theta1 + theta2 + theta3||_{L2(0,T)}
  double final_gap = 0.0;    ///< ||u^{ts}(T) - u_h^N||
  double energy_gap = 0.0;   ///< energy norm of u^{ts} - u_h^t
  double growth = 1.0;       ///< Gronwall factor

  // Nonlinear wave pieces.
  double init_potential = 0.0;  ///< int W(u0 | u^{ts}(0))
  double init_error_v = 0.0;    ///< ||v0 - v^{ts}(0)||
  double r1_weighted_u = 0.0;   ///< ||W''(u^{ts}) r_u||_{L1L2}
  double r1_v = 0.0;            ///< ||r_{v,1}||_{L1L2}
  double c_w = 0.0;
  double final_gap_u = 0.0;
  double final_gap_v = 0.0;
};

/// Right-hand side of the class's fully discrete bound (the H^{-1}
/// constant in front of theta is taken as 1). Throws
/// std::invalid_argument on negative or non-finite inputs and on
/// NonlinearWave without c_W > 0.
double total_bound(ProblemClass cls, const BoundInputs& in);

/// Left-hand side of the same bound, given true errors.
struct ErrorInputs {
  double epsilon = 0.0;
  double linf_l2 = 0.0;     ///< all components
  double linf_l2_u = 0.0;   ///< wave classes: first component
  double linf_l2_v = 0.0;   ///< wave classes: second component
  double energy = 0.0;      ///< over diffusing components
  double c_w = 0.0;
};
double bound_lhs(ProblemClass cls, const ErrorInputs& in);

/// Constants of the nonlinear scalar relative-entropy bound.
struct ScalarEntropyConstants {
  double K = 0.0;
  double growth = 1.0;  ///< exp(8 K T) for eps > 0, exp(4 K T) for eps = 0
};
/// K = (eps |dx u|_inf sup|A'|^2 + sup|f''|) |dx u|_inf with A' = 0 when
/// eps > 0; K = sup|f''| max(|u|_inf, |dx u|_inf) when eps = 0.
ScalarEntropyConstants nonlinear_scalar_constants(double flux_curvature_sup,
                                                  double dx_sup, double value_sup,
                                                  double epsilon, double final_time);

/// c_W = 2 min W'' and C_W = 2 max |W'''| over [lo, hi] (sampled).
std::pair<double, double> wave_constants(const WavePotential& w, double lo,
                                         double hi, int samples = 33);

/// Gronwall factor of the class: 1 for linear classes.
double gronwall_factor(ProblemClass cls, double epsilon, double final_time,
                       double flux_curvature_sup, double dx_sup,
                       double value_sup, double C_w);

/// Experimental order of convergence log(e1/e2) / log(h1/h2).
double eoc(double e_coarse, double e_fine, double h_coarse, double h_fine);

/// r1 = d_t u^{ts} + Df(u^{ts}) d_x u^{ts} - eps A_h(u_h^t) - s at one point.
State eval_r1(double t, double x, const SpaceTimeReconstruction& rec,
              const SemiDiscreteSystem& system);

/// True errors against an exact solution: max over time nodes of the L2
/// error (total and per component), and the DG energy norm of
/// u - u_h^t over the diffusing components in L2(0, T).
struct TrueErrors {
  double linf_l2 = 0.0;
  State components;
  double energy = 0.0;
};
/// Throws std::invalid_argument when the problem has no exact solution.
TrueErrors true_errors(const Trajectory& traj, const TemporalReconstruction& temporal,
                       const ProblemSpec& problem, const std::vector<bool>& mask,
                       int time_points = 0);

/// (theta1, theta2, theta3) at one time over diffusing components.
struct ThetaValues {
  double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;
  double sum() const { return theta1 + theta2 + theta3; }
};
ThetaValues theta(const ReconstructionSnapshot& snap,
                  const std::vector<bool>& mask);

struct EstimatorReport {
  ProblemClass problem_class = ProblemClass::LinearScalar;
  double epsilon = 0.0;
  double final_time = 0.0;

  double r1_norm = 0.0;
  State r1_components;
  double r1_weighted_u = 0.0;

  double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;  ///< L2(0,T) of each
  double theta_total = 0.0;                         ///< L2(0,T) of the sum

  double init_error = 0.0;
  State init_error_components;
  double init_potential = 0.0;
  double final_gap = 0.0;
  State final_gap_components;
  double energy_gap = 0.0;

  double growth_factor = 1.0;
  double entropy_K = 0.0;
  double c_w = 0.0, C_w = 0.0;
  double dx_sup = 0.0;           ///< inflated |d_x u^{ts}|_inf (relevant comp.)
  double flux_curvature_sup = 0.0;

  double total_bound = 0.0;

  bool has_exact = false;
  double true_error_linf_l2 = 0.0;
  State true_error_components;
  double true_error_energy = 0.0;
  double true_lhs = 0.0;
  double effectivity = 0.0;  ///< sqrt(total_bound / true_lhs)

  double mass_drift = 0.0;   ///< max_c |int u_h^N - int u_h^0|
};

struct EstimatorOptions {
  int time_points = 0;    ///< per step; defaults to q + 2
  int space_points = 0;   ///< per element; defaults to q + 3
  double sup_inflation = 1.05;
};

/// Build both reconstructions and evaluate every estimator quantity.
EstimatorReport estimate(const SemiDiscreteSystem& system,
                         const Trajectory& traj,
                         const EstimatorOptions& options = {});

}  // namespace rkdg
