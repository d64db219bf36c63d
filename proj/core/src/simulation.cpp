#include "rkdg/simulation.hpp"

#include <cmath>
#include <string>

#include "rkdg/imex.hpp"

namespace rkdg {

SemiDiscreteSystem::SemiDiscreteSystem(const ProblemSpec& problem,
                                       std::shared_ptr<const Mesh1D> mesh,
                                       int degree, FluxScheme scheme,
                                       double sigma)
    : problem_(&problem),
      mesh_(std::move(mesh)),
      degree_(degree),
      convection_(degree, scheme, problem.flux),
      sip_(mesh_, degree, sigma),
      diff_{problem.epsilon, problem.diffusion_mask, sigma} {
  problem.validate();
  diff_.validate(problem.components);
}

DGFunction SemiDiscreteSystem::projected_source(double t) const {
  if (!problem_->has_source()) {
    return DGFunction(mesh_, degree_, problem_->components);
  }
  const auto& src = problem_->source;
  return l2_project([&](double x) { return src(t, x); }, mesh_, degree_,
                    problem_->components);
}

DGFunction SemiDiscreteSystem::explicit_rhs(const DGFunction& u, double t) const {
  DGFunction out = convection_.apply(u);
  out *= -1.0;
  if (problem_->has_source()) out += projected_source(t);
  return out;
}

DGFunction SemiDiscreteSystem::diffusion(const DGFunction& u) const {
  return sip_.apply(u, diff_.mask);
}

DGFunction SemiDiscreteSystem::implicit_rhs(const DGFunction& u) const {
  DGFunction out = diffusion(u);
  out *= diff_.epsilon;
  return out;
}

DGFunction SemiDiscreteSystem::full_rhs(const DGFunction& u, double t) const {
  DGFunction out = explicit_rhs(u, t);
  out.axpy(diff_.epsilon, diffusion(u));
  return out;
}

DivergedError::DivergedError(std::size_t step, double time)
    : std::runtime_error("simulation diverged at step " + std::to_string(step) +
                         " (t=" + std::to_string(time) + ")"),
      step_(step),
      time_(time) {}

DGFunction imex_step(const DGFunction& u, double t, double tau,
                     const ImexTableau& tableau,
                     const SemiDiscreteSystem& system,
                     ImplicitDiffusionSolver& solver) {
  if (!(tau > 0.0)) throw std::invalid_argument("imex_step: tau must be > 0");
  const double eps = system.diffusion_config().epsilon;
  const auto& mask = system.diffusion_config().mask;
  return imex_advance(
      u, t, tau, tableau,
      [&](const DGFunction& y, double time) { return system.explicit_rhs(y, time); },
      [&](const DGFunction& y) { return system.implicit_rhs(y); },
      [&](double c, const DGFunction& b) { return solver.solve(c * eps, b, mask); });
}

void Trajectory::validate() const {
  if (times.size() != states.size() || times.size() != rhs.size()) {
    throw std::logic_error("Trajectory: size mismatch");
  }
  for (std::size_t n = 1; n < times.size(); ++n) {
    if (!(times[n] > times[n - 1])) {
      throw std::logic_error("Trajectory: times not strictly increasing");
    }
    if (!states[n].same_space(states[0]) || !rhs[n].same_space(states[0])) {
      throw std::logic_error("Trajectory: states do not share a space");
    }
  }
}

SimulationParameters resolve_parameters(const Mesh1D& mesh, int degree,
                                        double dt_factor,
                                        const SimulationOptions& options) {
  if (!(dt_factor > 0.0)) throw std::invalid_argument("dt_factor must be > 0");
  SimulationParameters p;
  p.dt = dt_factor * mesh.h_max();
  p.lambda = options.lambda.value_or(p.dt / mesh.h_min());
  p.sigma = options.sigma.value_or(default_sigma(degree));
  return p;
}

State integral(const DGFunction& f) {
  State out = State::Zero(f.components());
  for (std::size_t k = 0; k < f.num_elements(); ++k) {
    const double s = std::sqrt(f.mesh().element_size(k));
    for (int c = 0; c < f.components(); ++c) out[c] += s * f(k, 0, c);
  }
  return out;
}

namespace {

bool finite(const DGFunction& u) {
  for (double v : u.coefficients()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

Trajectory run_simulation(const SemiDiscreteSystem& system,
                          const ImexTableau& tableau, double dt,
                          double final_time) {
  if (!(dt > 0.0)) throw std::invalid_argument("run_simulation: dt must be > 0");
  if (!(final_time > 0.0)) throw std::invalid_argument("run_simulation: T must be > 0");
  const ProblemSpec& problem = system.problem();
  ImplicitDiffusionSolver solver(system.sip());

  Trajectory traj;
  traj.nominal_dt = dt;
  DGFunction u = l2_project(problem.initial, system.mesh_ptr(), system.degree(),
                            problem.components);
  double t = 0.0;
  traj.times.push_back(t);
  traj.rhs.push_back(system.full_rhs(u, t));
  traj.states.push_back(u);

  const double tol = 1e-10 * dt;
  std::size_t step = 0;
  while (final_time - t > tol) {
    double tau = dt;
    if (t + tau > final_time - tol) {
      traj.final_step_truncated = std::abs(final_time - t - dt) > tol;
      tau = final_time - t;
    }
    u = imex_step(u, t, tau, tableau, system, solver);
    ++step;
    t = (final_time - (t + tau) <= tol) ? final_time : t + tau;
    if (!finite(u)) throw DivergedError(step, t);
    traj.times.push_back(t);
    traj.rhs.push_back(system.full_rhs(u, t));
    traj.states.push_back(u);
  }
  return traj;
}

Trajectory run_simulation(const ProblemSpec& problem,
                          const std::shared_ptr<const Mesh1D>& mesh, int degree,
                          const ImexTableau& tableau, double dt_factor,
                          double final_time, const SimulationOptions& options) {
  const SimulationParameters params =
      resolve_parameters(*mesh, degree, dt_factor, options);
  const SemiDiscreteSystem system(problem, mesh, degree,
                                  FluxScheme(options.flux, params.lambda),
                                  params.sigma);
  return run_simulation(system, tableau, params.dt, final_time);
}

}  // namespace rkdg
