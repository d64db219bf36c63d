#include "rkdg/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rkdg {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

State scalar(double v) {
  State s(1);
  s[0] = v;
  return s;
}

State pair(double a, double b) {
  State s(2);
  s << a, b;
  return s;
}

Jacobian scalar_jac(double v) {
  Jacobian j(1, 1);
  j(0, 0) = v;
  return j;
}

}  // namespace

std::string to_string(ProblemClass c) {
  switch (c) {
    case ProblemClass::LinearScalar: return "linear-scalar";
    case ProblemClass::NonlinearScalar: return "nonlinear-scalar";
    case ProblemClass::LinearSystem: return "linear-system";
    case ProblemClass::LinearWave: return "linear-wave";
    case ProblemClass::NonlinearWave: return "nonlinear-wave";
  }
  return "unknown";
}

ProblemClass parse_problem_class(const std::string& name) {
  for (auto c : {ProblemClass::LinearScalar, ProblemClass::NonlinearScalar,
                 ProblemClass::LinearSystem, ProblemClass::LinearWave,
                 ProblemClass::NonlinearWave}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown problem class '" + name + "'");
}

void ProblemSpec::validate() const {
  if (components < 1 || components > kMaxComponents) {
    throw std::invalid_argument("ProblemSpec: bad component count");
  }
  if (static_cast<int>(diffusion_mask.size()) != components) {
    throw std::invalid_argument("ProblemSpec: diffusion mask size mismatch");
  }
  if (!flux.value || !flux.jacobian || !initial) {
    throw std::invalid_argument("ProblemSpec: flux, Jacobian and initial data required");
  }
  if (flux.components != components) {
    throw std::invalid_argument("ProblemSpec: flux component count mismatch");
  }
  if (!(epsilon >= 0.0)) throw std::invalid_argument("ProblemSpec: epsilon < 0");
  if (has_exact() && !exact_dx) {
    throw std::invalid_argument("ProblemSpec: exact solution needs exact_dx");
  }
  const bool scalar_class = problem_class == ProblemClass::LinearScalar ||
                            problem_class == ProblemClass::NonlinearScalar;
  const bool wave_class = problem_class == ProblemClass::LinearWave ||
                          problem_class == ProblemClass::NonlinearWave;
  if (scalar_class && components != 1) {
    throw std::invalid_argument("ProblemSpec: scalar class needs m = 1");
  }
  if (scalar_class && !diffusion_mask[0]) {
    throw std::invalid_argument("ProblemSpec: scalar classes diffuse their component");
  }
  if (wave_class &&
      (components != 2 || diffusion_mask[0] || !diffusion_mask[1])) {
    throw std::invalid_argument(
        "ProblemSpec: wave classes need m = 2 with diffusion on v only");
  }
  if (problem_class == ProblemClass::NonlinearWave && !potential) {
    throw std::invalid_argument("ProblemSpec: nonlinear wave needs W and derivatives");
  }
  if (problem_class == ProblemClass::NonlinearScalar && !flux_hessian) {
    throw std::invalid_argument("ProblemSpec: nonlinear scalar needs f''");
  }
}

ProblemSpec linear_advection_diffusion(double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  ProblemSpec p;
  p.id = "linear";
  p.problem_class = ProblemClass::LinearScalar;
  p.components = 1;
  p.domain = {0.0, kTwoPi};
  p.flux = {1, [](const State& u) { return State(u); },
            [](const State&) { return scalar_jac(1.0); }};
  p.flux_hessian = [](const State&, int) { return scalar_jac(0.0); };
  p.epsilon = epsilon;
  p.diffusion_mask = {true};
  p.initial = [](double x) { return scalar(std::sin(x)); };
  p.exact = [epsilon](double t, double x) {
    return scalar(std::exp(-epsilon * t) * std::sin(x - t));
  };
  p.exact_dx = [epsilon](double t, double x) {
    return scalar(std::exp(-epsilon * t) * std::cos(x - t));
  };
  return p;
}

ProblemSpec viscous_burgers(double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  ProblemSpec p;
  p.id = "burgers";
  p.problem_class = ProblemClass::NonlinearScalar;
  p.components = 1;
  p.domain = {0.0, kTwoPi};
  p.flux = {1, [](const State& u) { return scalar(0.5 * u[0] * u[0]); },
            [](const State& u) { return scalar_jac(u[0]); }};
  p.flux_hessian = [](const State&, int) { return scalar_jac(1.0); };
  p.epsilon = epsilon;
  p.diffusion_mask = {true};
  p.initial = [](double x) { return scalar(std::sin(x)); };
  const double four_pi = 4.0 * std::numbers::pi;
  p.exact = [four_pi](double t, double x) {
    return scalar((1.0 + 0.1 * std::sin(four_pi * t)) * std::sin(x - t));
  };
  p.exact_dx = [four_pi](double t, double x) {
    return scalar((1.0 + 0.1 * std::sin(four_pi * t)) * std::cos(x - t));
  };
  // u = a(t) s, s = sin(x - t): u_t + u u_x - eps u_xx
  //   = a' s - a c + a^2 s c + eps a s,  c = cos(x - t)
  p.source = [four_pi, epsilon](double t, double x) {
    const double a = 1.0 + 0.1 * std::sin(four_pi * t);
    const double da = 0.1 * four_pi * std::cos(four_pi * t);
    const double s = std::sin(x - t);
    const double c = std::cos(x - t);
    return scalar(da * s - a * c + a * a * s * c + epsilon * a * s);
  };
  return p;
}

ProblemSpec nonlinear_wave(double epsilon, double gamma) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  ProblemSpec p;
  p.id = "wave";
  p.problem_class = ProblemClass::NonlinearWave;
  p.components = 2;
  p.domain = {0.0, kTwoPi};

  WavePotential w;
  w.W = [gamma](double u) { return std::pow(u, 1.0 - gamma) / (gamma - 1.0); };
  w.dW = [gamma](double u) { return -std::pow(u, -gamma); };
  w.d2W = [gamma](double u) { return gamma * std::pow(u, -gamma - 1.0); };
  w.d3W = [gamma](double u) {
    return -gamma * (gamma + 1.0) * std::pow(u, -gamma - 2.0);
  };
  p.potential = w;

  // f(u, v) = (-v, -W'(u))
  p.flux = {2,
            [w](const State& s) { return pair(-s[1], -w.dW(s[0])); },
            [w](const State& s) {
              Jacobian j(2, 2);
              j << 0.0, -1.0, -w.d2W(s[0]), 0.0;
              return j;
            }};
  p.flux_hessian = [w](const State& s, int i) {
    Jacobian h = Jacobian::Zero(2, 2);
    if (i == 1) h(0, 0) = -w.d3W(s[0]);
    return h;
  };
  p.epsilon = epsilon;
  p.diffusion_mask = {false, true};
  p.initial = [](double x) {
    return pair(2.0 + 0.2 * std::sin(2.0 * x), 1.0 + 0.3 * std::cos(x));
  };
  p.exact = [](double t, double x) {
    return pair(2.0 + 0.2 * std::sin(2.0 * x - t),
                1.0 + 0.3 * std::cos(x + 2.0 * t));
  };
  p.exact_dx = [](double t, double x) {
    return pair(0.4 * std::cos(2.0 * x - t), -0.3 * std::sin(x + 2.0 * t));
  };
  // f1 = u_t - v_x, f2 = v_t - W''(u) u_x - eps v_xx
  p.source = [w, epsilon](double t, double x) {
    const double u = 2.0 + 0.2 * std::sin(2.0 * x - t);
    const double ut = -0.2 * std::cos(2.0 * x - t);
    const double ux = 0.4 * std::cos(2.0 * x - t);
    const double vt = -0.6 * std::sin(x + 2.0 * t);
    const double vx = -0.3 * std::sin(x + 2.0 * t);
    const double vxx = -0.3 * std::cos(x + 2.0 * t);
    return pair(ut - vx, vt - w.d2W(u) * ux - epsilon * vxx);
  };
  return p;
}

ProblemSpec make_problem(const std::string& id, double epsilon) {
  if (id == "linear") return linear_advection_diffusion(epsilon);
  if (id == "burgers") return viscous_burgers(epsilon);
  if (id == "wave") return nonlinear_wave(epsilon);
  throw std::invalid_argument("unknown problem '" + id + "'");
}

std::vector<std::string> builtin_problem_ids() {
  return {"linear", "burgers", "wave"};
}

ProblemCheck check_flux_derivatives(const ProblemSpec& p, int samples,
                                    unsigned seed) {
  ProblemCheck check{"flux derivatives vs central differences", 0.0, 1e-5};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> xdist(p.domain.lo, p.domain.hi);
  std::uniform_real_distribution<double> pert(-0.1, 0.1);
  const int m = p.components;
  for (int s = 0; s < samples; ++s) {
    State u = p.initial(xdist(rng));
    for (int c = 0; c < m; ++c) u[c] += pert(rng);
    const Jacobian jac = p.flux.jacobian(u);
    for (int c = 0; c < m; ++c) {
      const double step = 1e-6 * std::max(1.0, std::abs(u[c]));
      State up = u, um = u;
      up[c] += step;
      um[c] -= step;
      const State fd = (p.flux.value(up) - p.flux.value(um)) / (2.0 * step);
      const double scale = std::max(1.0, jac.cwiseAbs().maxCoeff());
      for (int r = 0; r < m; ++r) {
        check.max_error = std::max(check.max_error, std::abs(fd[r] - jac(r, c)) / scale);
      }
      if (p.flux_hessian) {
        const Jacobian fdh = (p.flux.jacobian(up) - p.flux.jacobian(um)) / (2.0 * step);
        for (int i = 0; i < m; ++i) {
          const Jacobian h = p.flux_hessian(u, i);
          const double hs = std::max(1.0, h.cwiseAbs().maxCoeff());
          for (int r = 0; r < m; ++r) {
            check.max_error = std::max(check.max_error, std::abs(fdh(i, r) - h(r, c)) / hs);
          }
        }
      }
    }
  }
  return check;
}

ProblemCheck check_manufactured_source(const ProblemSpec& p, int samples,
                                       double final_time, unsigned seed) {
  ProblemCheck check{"manufactured source residual", 0.0, 1e-6};
  if (!p.has_exact()) {
    check.name += " (no exact solution)";
    return check;
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> xdist(p.domain.lo, p.domain.hi);
  std::uniform_real_distribution<double> tdist(0.0, final_time);
  const double h = 1e-4;
  for (int s = 0; s < samples; ++s) {
    const double t = tdist(rng);
    const double x = xdist(rng);
    const State ut = (p.exact(t + h, x) - p.exact(t - h, x)) / (2.0 * h);
    const State fx =
        (p.flux.value(p.exact(t, x + h)) - p.flux.value(p.exact(t, x - h))) / (2.0 * h);
    const State uxx =
        (p.exact(t, x + h) - 2.0 * p.exact(t, x) + p.exact(t, x - h)) / (h * h);
    State residual = ut + fx;
    for (int c = 0; c < p.components; ++c) {
      if (p.diffusion_mask[c]) residual[c] -= p.epsilon * uxx[c];
    }
    if (p.has_source()) residual -= p.source(t, x);
    check.max_error = std::max(check.max_error, residual.cwiseAbs().maxCoeff());
  }
  return check;
}

ProblemCheck check_periodicity(const ProblemSpec& p, int samples,
                               double final_time) {
  ProblemCheck check{"exact solution periodicity", 0.0, 1e-12};
  if (!p.has_exact()) return check;
  for (int s = 0; s <= samples; ++s) {
    const double t = final_time * s / std::max(samples, 1);
    const State d = p.exact(t, p.domain.lo) - p.exact(t, p.domain.hi);
    check.max_error = std::max(check.max_error, d.cwiseAbs().maxCoeff());
  }
  return check;
}

std::vector<ProblemCheck> validate_problem(const ProblemSpec& p,
                                           double final_time) {
  return {check_flux_derivatives(p, 100, 7u),
          check_manufactured_source(p, 1000, final_time, 11u),
          check_periodicity(p, 100, final_time)};
}

}  // namespace rkdg
