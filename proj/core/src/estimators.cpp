#include "rkdg/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rkdg/energy_norm.hpp"
#include "rkdg/norms.hpp"
#include "rkdg/quadrature.hpp"

namespace rkdg {
namespace {

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string("bound input ") + name +
                                " must be finite and non-negative");
  }
}

bool active(const std::vector<bool>& mask, int c) {
  return mask.empty() || mask[c];
}

double sq(double x) { return x * x; }

State residual_at(const ReconstructionSnapshot& snap, const DGFunction& diffused,
                  std::size_t k, double xi, const SemiDiscreteSystem& system) {
  const ProblemSpec& p = system.problem();
  const State u = snap.st.value_at(k, xi);
  const State u_dx = snap.st.derivative_at(k, xi);
  State r = snap.st_dt.value_at(k, xi) + p.flux.jacobian(u) * u_dx;
  r -= system.diffusion_config().epsilon * diffused.value_at(k, xi);
  if (p.has_source()) {
    r -= p.source(snap.time, snap.st.mesh().from_reference(k, xi));
  }
  return r;
}

// W(u | u_hat) = W(u) - W(u_hat) - W'(u_hat)(u - u_hat); a Taylor form
// avoids cancellation when u is close to u_hat.
double relative_potential(const WavePotential& w, double u, double u_hat) {
  const double d = u - u_hat;
  if (std::abs(d) <= 1e-4 * std::max(1.0, std::abs(u_hat))) {
    return d * d * (0.5 * w.d2W(u_hat) + d * w.d3W(u_hat) / 6.0);
  }
  return w.W(u) - w.W(u_hat) - w.dW(u_hat) * d;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  Range padded(double fraction) const {
    const double pad = fraction * std::max(hi - lo, 1e-12);
    return {lo - pad, hi + pad};
  }
};

double max_flux_curvature(const ProblemSpec& p, Range r, int samples) {
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    State u(1);
    u[0] = r.lo + (r.hi - r.lo) * s / (samples - 1);
    best = std::max(best, std::abs(p.flux_hessian(u, 0)(0, 0)));
  }
  return best;
}

}  // namespace

double total_bound(ProblemClass cls, const BoundInputs& in) {
  require_nonnegative(in.epsilon, "epsilon");
  require_nonnegative(in.init_error, "init_error");
  require_nonnegative(in.r1, "r1");
  require_nonnegative(in.theta, "theta");
  require_nonnegative(in.final_gap, "final_gap");
  require_nonnegative(in.energy_gap, "energy_gap");
  require_nonnegative(in.growth, "growth");
  const double eps = in.epsilon;
  const double I2 = sq(in.init_error), R2 = sq(in.r1), T2 = sq(in.theta);
  const double G2 = sq(in.final_gap), J2 = sq(in.energy_gap);
  switch (cls) {
    case ProblemClass::LinearScalar:
      return 8.0 * (I2 + 4.0 * R2 + eps * T2) + 2.0 * (G2 + 2.0 * eps * J2);
    case ProblemClass::NonlinearScalar:
      if (eps > 0.0) {
        return 2.0 * (4.0 * I2 + 16.0 * R2 + 8.0 * eps * T2) * in.growth +
               2.0 * (G2 + eps * J2);
      }
      return 2.0 * (2.0 * I2 + 4.0 * R2) * in.growth + 2.0 * G2;
    case ProblemClass::LinearSystem:
      return 2.0 * (I2 + 4.0 * R2 + eps * T2) + 0.5 * G2 + eps * J2;
    case ProblemClass::LinearWave:
      return 4.0 * I2 + 4.0 * R2 + 4.0 * eps * T2 + 2.0 * G2 + 4.0 * eps * J2;
    case ProblemClass::NonlinearWave: {
      if (!(in.c_w > 0.0) || !std::isfinite(in.c_w)) {
        throw std::invalid_argument("nonlinear wave bound needs c_W > 0");
      }
      require_nonnegative(in.init_potential, "init_potential");
      require_nonnegative(in.init_error_v, "init_error_v");
      require_nonnegative(in.r1_weighted_u, "r1_weighted_u");
      require_nonnegative(in.r1_v, "r1_v");
      require_nonnegative(in.final_gap_u, "final_gap_u");
      require_nonnegative(in.final_gap_v, "final_gap_v");
      const double bracket = in.init_potential + 0.5 * sq(in.init_error_v) +
                             (2.0 / in.c_w) * sq(in.r1_weighted_u) +
                             2.0 * sq(in.r1_v) + 0.5 * eps * T2;
      return 4.0 * in.growth * bracket + 0.5 * in.c_w * sq(in.final_gap_u) +
             0.5 * sq(in.final_gap_v) + eps * J2;
    }
  }
  throw std::invalid_argument("unknown problem class");
}

double bound_lhs(ProblemClass cls, const ErrorInputs& in) {
  const double eps = in.epsilon;
  const double E2 = sq(in.energy);
  switch (cls) {
    case ProblemClass::LinearScalar:
      return sq(in.linf_l2) + 2.0 * eps * E2;
    case ProblemClass::NonlinearScalar:
      return sq(in.linf_l2) + eps * E2;
    case ProblemClass::LinearSystem:
      return 0.25 * sq(in.linf_l2) + 0.5 * eps * E2;
    case ProblemClass::LinearWave:
      return 0.5 * sq(in.linf_l2) + 0.5 * eps * E2;
    case ProblemClass::NonlinearWave:
      return 0.25 * in.c_w * sq(in.linf_l2_u) + 0.25 * sq(in.linf_l2_v) +
             0.5 * eps * E2;
  }
  throw std::invalid_argument("unknown problem class");
}

ScalarEntropyConstants nonlinear_scalar_constants(double flux_curvature_sup,
                                                  double dx_sup, double value_sup,
                                                  double epsilon,
                                                  double final_time) {
  ScalarEntropyConstants out;
  if (epsilon > 0.0) {
    out.K = flux_curvature_sup * dx_sup;
    out.growth = std::exp(8.0 * out.K * final_time);
  } else {
    out.K = flux_curvature_sup * std::max(value_sup, dx_sup);
    out.growth = std::exp(4.0 * out.K * final_time);
  }
  return out;
}

std::pair<double, double> wave_constants(const WavePotential& w, double lo,
                                         double hi, int samples) {
  if (!(lo <= hi) || samples < 2) {
    throw std::invalid_argument("wave_constants: empty interval");
  }
  double min_d2 = std::numeric_limits<double>::infinity();
  double max_d3 = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double u = lo + (hi - lo) * s / (samples - 1);
    min_d2 = std::min(min_d2, w.d2W(u));
    max_d3 = std::max(max_d3, std::abs(w.d3W(u)));
  }
  return {2.0 * min_d2, 2.0 * max_d3};
}

double gronwall_factor(ProblemClass cls, double epsilon, double final_time,
                       double flux_curvature_sup, double dx_sup,
                       double value_sup, double C_w) {
  switch (cls) {
    case ProblemClass::NonlinearScalar:
      return nonlinear_scalar_constants(flux_curvature_sup, dx_sup, value_sup,
                                        epsilon, final_time)
          .growth;
    case ProblemClass::NonlinearWave:
      return std::exp(C_w * final_time * dx_sup);
    default:
      return 1.0;
  }
}

double eoc(double e_coarse, double e_fine, double h_coarse, double h_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !(h_coarse > 0.0) ||
      !(h_fine > 0.0) || h_coarse == h_fine) {
    throw std::invalid_argument("eoc needs positive errors and distinct sizes");
  }
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

State eval_r1(double t, double x, const SpaceTimeReconstruction& rec,
              const SemiDiscreteSystem& system) {
  const ReconstructionSnapshot snap = rec.snapshot(t);
  const DGFunction diffused = system.diffusion(snap.temporal);
  const Mesh1D& mesh = snap.st.mesh();
  const std::size_t k = mesh.locate(
      x, mesh.node_index(x) >= 0 ? Side::Right : Side::Interior);
  return residual_at(snap, diffused, k, mesh.to_reference(k, x), system);
}

TrueErrors true_errors(const Trajectory& traj, const TemporalReconstruction& temporal,
                       const ProblemSpec& problem, const std::vector<bool>& mask,
                       int time_points) {
  if (!problem.has_exact() || !problem.exact_dx) {
    throw std::invalid_argument("true_errors needs an exact solution");
  }
  const int m = problem.components;
  TrueErrors out;
  out.components = State::Zero(m);
  for (std::size_t n = 0; n < traj.times.size(); ++n) {
    const double t = traj.times[n];
    const State e = l2_distance_components(
        traj.states[n], [&](double x) { return problem.exact(t, x); });
    out.components = out.components.cwiseMax(e);
    out.linf_l2 = std::max(out.linf_l2, e.norm());
  }
  const int q = traj.states.front().degree();
  out.energy = l2_in_time(
      [&](double t) {
        const DGFunction v = temporal.value(t);
        return std::sqrt(energy_integrand_against(
            v, [&](double x) { return problem.exact_dx(t, x); }, mask, q + 3));
      },
      traj.times, time_points > 0 ? time_points : q + 2);
  return out;
}

ThetaValues theta(const ReconstructionSnapshot& snap,
                  const std::vector<bool>& mask) {
  const DGFunction& v = snap.temporal;
  const Mesh1D& mesh = v.mesh();
  const QuadratureRule rule = gauss_legendre(v.degree() + 3);
  ThetaValues out;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
    const double jac = 0.5 * mesh.element_size(k);
    for (std::size_t g = 0; g < rule.size(); ++g) {
      const double xi = rule.points[g];
      const State d = snap.st.derivative_at(k, xi) - v.derivative_at(k, xi);
      for (int c = 0; c < v.components(); ++c) {
        if (active(mask, c)) s1 += jac * rule.weights[g] * d[c] * d[c];
      }
    }
  }
  for (std::size_t i = 0; i < mesh.num_nodes(); ++i) {
    const State jv = v.trace(i, Side::Left) - v.trace(i, Side::Right);
    const State jd = v.trace_dx(i, Side::Left) - v.trace_dx(i, Side::Right);
    const double h = mesh.node_size(i);
    for (int c = 0; c < v.components(); ++c) {
      if (!active(mask, c)) continue;
      s2 += jv[c] * jv[c] / h;
      s3 += h * jd[c] * jd[c];
    }
  }
  out.theta1 = std::sqrt(s1);
  out.theta2 = std::sqrt(s2);
  out.theta3 = std::sqrt(s3);
  return out;
}

EstimatorReport estimate(const SemiDiscreteSystem& system,
                         const Trajectory& traj,
                         const EstimatorOptions& options) {
  traj.validate();
  const ProblemSpec& p = system.problem();
  const int q = system.degree();
  const int m = p.components;
  const std::vector<bool>& mask = system.diffusion_config().mask;
  const double eps = system.diffusion_config().epsilon;
  const double inflate = options.sup_inflation;
  const bool wave = p.problem_class == ProblemClass::NonlinearWave;
  if (wave && !p.potential) {
    throw std::invalid_argument("nonlinear wave problem without a potential");
  }

  const TemporalReconstruction temporal(traj);
  const SpaceTimeReconstruction rec(temporal,
                                    SpatialReconstructor(system.scheme(), p.flux));
  const Mesh1D& mesh = *system.mesh_ptr();
  const QuadratureRule trule =
      gauss_legendre(options.time_points > 0 ? options.time_points : q + 2);
  const QuadratureRule xrule =
      gauss_legendre(options.space_points > 0 ? options.space_points : q + 3);

  EstimatorReport rep;
  rep.problem_class = p.problem_class;
  rep.epsilon = eps;
  rep.final_time = traj.times.back();
  rep.has_exact = p.has_exact();
  rep.r1_components = State::Zero(m);

  std::vector<Range> value_range(m);
  std::vector<double> dx_sup(m, 0.0);
  double theta_sq[3] = {0.0, 0.0, 0.0};
  double theta_sum_sq = 0.0;
  double energy_gap_sq = 0.0;

  auto track = [&](const DGFunction& st, std::size_t k, double xi) {
    const State u = st.value_at(k, xi);
    const State d = st.derivative_at(k, xi);
    for (int c = 0; c < m; ++c) {
      value_range[c].add(u[c]);
      dx_sup[c] = std::max(dx_sup[c], std::abs(d[c]));
    }
  };

  for (std::size_t n = 0; n < temporal.num_intervals(); ++n) {
    const double t0 = traj.times[n];
    const double tau = traj.times[n + 1] - t0;
    for (std::size_t gt = 0; gt < trule.size(); ++gt) {
      const double t = t0 + 0.5 * tau * (trule.points[gt] + 1.0);
      const double wt = 0.5 * tau * trule.weights[gt];
      const ReconstructionSnapshot snap = rec.snapshot(t);
      const DGFunction diffused = system.diffusion(snap.temporal);

      State r_sq = State::Zero(m);
      double weighted_sq = 0.0;
      for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
        const double jac = 0.5 * mesh.element_size(k);
        for (std::size_t g = 0; g < xrule.size(); ++g) {
          const double xi = xrule.points[g];
          const double w = jac * xrule.weights[g];
          const State r = residual_at(snap, diffused, k, xi, system);
          r_sq += w * r.cwiseAbs2();
          if (wave) {
            const double u = snap.st.value_at(k, xi)[0];
            weighted_sq += w * sq(p.potential->d2W(u) * r[0]);
          }
          track(snap.st, k, xi);
        }
        track(snap.st, k, -1.0);
        track(snap.st, k, 1.0);
      }
      rep.r1_norm += wt * std::sqrt(r_sq.sum());
      for (int c = 0; c < m; ++c) rep.r1_components[c] += wt * std::sqrt(r_sq[c]);
      rep.r1_weighted_u += wt * std::sqrt(weighted_sq);

      const ThetaValues th = theta(snap, mask);
      theta_sq[0] += wt * sq(th.theta1);
      theta_sq[1] += wt * sq(th.theta2);
      theta_sq[2] += wt * sq(th.theta3);
      theta_sum_sq += wt * sq(th.sum());
      energy_gap_sq += wt * (sq(th.theta1) + sq(th.theta2));
    }
  }
  rep.theta1 = std::sqrt(theta_sq[0]);
  rep.theta2 = std::sqrt(theta_sq[1]);
  rep.theta3 = std::sqrt(theta_sq[2]);
  rep.theta_total = std::sqrt(theta_sum_sq);
  rep.energy_gap = std::sqrt(energy_gap_sq);

  // Initial mismatch u_0 - u^{ts}(0).
  {
    const ReconstructionSnapshot snap0 = rec.snapshot(traj.times.front());
    State init_sq = State::Zero(m);
    for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
      const double jac = 0.5 * mesh.element_size(k);
      for (std::size_t g = 0; g < xrule.size(); ++g) {
        const double xi = xrule.points[g];
        const double w = jac * xrule.weights[g];
        const State u0 = p.initial(mesh.from_reference(k, xi));
        const State uh = snap0.st.value_at(k, xi);
        init_sq += w * (u0 - uh).cwiseAbs2();
        if (wave) {
          rep.init_potential += w * relative_potential(*p.potential, u0[0], uh[0]);
        }
        for (int c = 0; c < m; ++c) value_range[c].add(u0[c]);
      }
    }
    rep.init_error_components = init_sq.cwiseSqrt();
    rep.init_error = std::sqrt(init_sq.sum());
    rep.init_potential = std::max(rep.init_potential, 0.0);
  }

  // Final gap u^{ts}(T) - u_h^N, both polynomial so the norm is exact.
  {
    const ReconstructionSnapshot snapN = rec.snapshot(traj.times.back());
    DGFunction gap = raise_degree(traj.states.back(), q + 1);
    gap -= snapN.st;
    State g_sq = State::Zero(m);
    for (std::size_t k = 0; k < mesh.num_elements(); ++k) {
      for (int j = 0; j <= q + 1; ++j) {
        for (int c = 0; c < m; ++c) g_sq[c] += sq(gap(k, j, c));
      }
    }
    rep.final_gap_components = g_sq.cwiseSqrt();
    rep.final_gap = std::sqrt(g_sq.sum());
  }

  // Constants of the Gronwall factor.
  const double T = rep.final_time;
  if (p.problem_class == ProblemClass::NonlinearScalar) {
    const Range r = value_range[0].padded(0.05);
    rep.flux_curvature_sup = inflate * max_flux_curvature(p, r, 33);
    rep.dx_sup = inflate * dx_sup[0];
    const double value_sup =
        inflate * std::max(std::abs(value_range[0].lo), std::abs(value_range[0].hi));
    const ScalarEntropyConstants k =
        nonlinear_scalar_constants(rep.flux_curvature_sup, rep.dx_sup, value_sup,
                                   eps, T);
    rep.entropy_K = k.K;
    rep.growth_factor = k.growth;
  } else if (wave) {
    const Range r = value_range[0].padded(0.05);
    const auto [c_w, C_w] = wave_constants(*p.potential, r.lo, r.hi);
    rep.c_w = c_w;
    rep.C_w = C_w;
    rep.dx_sup = inflate * dx_sup[1];
    rep.growth_factor = gronwall_factor(p.problem_class, eps, T, 0.0, rep.dx_sup,
                                        0.0, C_w);
  } else {
    double d = 0.0;
    for (int c = 0; c < m; ++c) d = std::max(d, dx_sup[c]);
    rep.dx_sup = inflate * d;
  }

  BoundInputs in;
  in.epsilon = eps;
  in.final_time = T;
  in.init_error = rep.init_error;
  in.r1 = rep.r1_norm;
  in.theta = rep.theta_total;
  in.final_gap = rep.final_gap;
  in.energy_gap = rep.energy_gap;
  in.growth = rep.growth_factor;
  if (wave) {
    in.init_potential = rep.init_potential;
    in.init_error_v = rep.init_error_components[1];
    in.r1_weighted_u = rep.r1_weighted_u;
    in.r1_v = rep.r1_components[1];
    in.c_w = rep.c_w;
    in.final_gap_u = rep.final_gap_components[0];
    in.final_gap_v = rep.final_gap_components[1];
  }
  rep.total_bound = total_bound(p.problem_class, in);

  if (p.has_exact()) {
    const TrueErrors te = true_errors(traj, temporal, p, mask, trule.size());
    rep.true_error_components = te.components;
    rep.true_error_linf_l2 = te.linf_l2;
    rep.true_error_energy = te.energy;
    ErrorInputs ei;
    ei.epsilon = eps;
    ei.linf_l2 = te.linf_l2;
    ei.linf_l2_u = te.components[0];
    ei.linf_l2_v = m > 1 ? te.components[1] : 0.0;
    ei.energy = te.energy;
    ei.c_w = rep.c_w;
    rep.true_lhs = bound_lhs(p.problem_class, ei);
    rep.effectivity = rep.true_lhs > 0.0
                          ? std::sqrt(rep.total_bound / rep.true_lhs)
                          : std::numeric_limits<double>::infinity();
  }

  const State drift = integral(traj.states.back()) - integral(traj.states.front());
  rep.mass_drift = drift.cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace rkdg
