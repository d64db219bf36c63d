#include <doctest.h>

#include <cmath>
#include <limits>

#include "rkdg/estimators.hpp"
#include "rkdg/problem.hpp"
#include "rkdg/simulation.hpp"
#include "test_support.hpp"

using namespace rkdg;
using testing::scalar;

namespace {

std::shared_ptr<const Mesh1D> mesh_for(const ProblemSpec& p, std::size_t n) {
  return std::make_shared<const Mesh1D>(build_uniform_mesh(n, p.domain));
}

FluxScheme lw(double lambda = 0.1) {
  return FluxScheme(FluxScheme::Kind::LaxWendroff, lambda);
}

// Problem with a constant steady state and no source or exact solution.
ProblemSpec steady(ProblemSpec p, State value) {
  p.source = nullptr;
  p.exact = nullptr;
  p.exact_dx = nullptr;
  p.initial = [value](double) { return value; };
  return p;
}

ReconstructionSnapshot snapshot_of(const DGFunction& v, const FluxFunction& f) {
  ReconstructionSnapshot s;
  s.temporal = v;
  s.temporal_dt = DGFunction(v.mesh_ptr(), v.degree(), v.components());
  const SpatialReconstructor rec(lw(), f);
  s.st = rec.reconstruct(v);
  s.st_dt = rec.reconstruct_dt(v, s.temporal_dt);
  return s;
}

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("r1 vanishes on constant steady states") {
  State wave_state(2);
  wave_state << 2.0, 1.0;
  for (const ProblemSpec& p : {steady(linear_advection_diffusion(1e-3), scalar(0.7)),
                               steady(viscous_burgers(1e-3), scalar(-0.4)),
                               steady(nonlinear_wave(1e-3), wave_state)}) {
    const auto mesh = mesh_for(p, 12);
    const SemiDiscreteSystem sys(p, mesh, 2, lw(), default_sigma(2));
    const Trajectory traj = run_simulation(sys, kencarp3(), 0.05, 0.2);
    const TemporalReconstruction temporal(traj);
    const SpaceTimeReconstruction st(temporal, SpatialReconstructor(sys.scheme(), p.flux));
    for (double t : {0.0, 0.07, 0.2}) {
      for (double x : {0.0, 1.1, 4.0}) {
        CHECK(eval_r1(t, x, st, sys).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
    const EstimatorReport rep = estimate(sys, traj);
    CHECK(rep.r1_norm < 1e-10);
    CHECK(rep.theta_total < 1e-10);
    CHECK(rep.final_gap < 1e-10);
    CAPTURE(rep.init_error);
    CAPTURE(rep.init_potential);
    CAPTURE(rep.energy_gap);
    CHECK(rep.total_bound < 1e-18);
    CHECK_FALSE(rep.has_exact);
  }
}

TEST_CASE("theta terms vanish on smooth continuous data") {
  const auto mesh = testing::jittered(8, 3, 0.0, 1.0);
  const auto smooth = [](double x) { return scalar(x * x * (1 - x) * (1 - x)); };
  const ReconstructionSnapshot s =
      snapshot_of(l2_project(smooth, mesh, 4, 1), linear_advection_diffusion(0).flux);
  const ThetaValues th = theta(s, {true});
  CHECK(th.theta1 < 1e-10);
  CHECK(th.theta2 < 1e-10);
  CHECK(th.theta3 < 1e-10);
}

TEST_CASE("theta2 counts each jump as |J| / sqrt(h)") {
  const auto mesh = testing::uniform(4, 0.0, 1.0);
  const double J = 0.6, h = 0.25;
  const DGFunction step =
      l2_project([J](double x) { return scalar(x < 0.5 ? J : 0.0); }, mesh, 1, 1);
  const ThetaValues th = theta(snapshot_of(step, linear_advection_diffusion(0).flux), {true});
  // Jumps of size J at x = 0.5 and (periodically) at x = 0.
  CHECK(th.theta2 == doctest::Approx(std::sqrt(2 * J * J / h)).epsilon(1e-12));
  CHECK(th.theta3 < 1e-12);
  CHECK(theta(snapshot_of(step, linear_advection_diffusion(0).flux), {false}).sum() == 0.0);
}

TEST_CASE("Gronwall constants") {
  CHECK(gronwall_factor(ProblemClass::LinearScalar, 1e-3, 2.0, 5.0, 5.0, 5.0, 5.0) == 1.0);
  CHECK(gronwall_factor(ProblemClass::LinearWave, 0.0, 2.0, 5.0, 5.0, 5.0, 5.0) == 1.0);
  const double T = 0.5;
  const ScalarEntropyConstants inviscid = nonlinear_scalar_constants(1.0, 3.0, 1.0, 0.0, T);
  CHECK(inviscid.K == doctest::Approx(3.0));
  CHECK(inviscid.growth == doctest::Approx(std::exp(12.0 * T)));
  const ScalarEntropyConstants viscous = nonlinear_scalar_constants(1.0, 3.0, 1.0, 1e-4, T);
  CHECK(viscous.K == doctest::Approx(3.0));
  CHECK(viscous.growth == doctest::Approx(std::exp(24.0 * T)));
  const WavePotential w = *nonlinear_wave(0.0).potential;
  const auto [c_w, C_w] = wave_constants(w, 1.0, 1.0);
  CHECK(c_w == doctest::Approx(2.8));
  CHECK(C_w == doctest::Approx(6.72));
}

TEST_CASE("total bound coefficients") {
  BoundInputs zero;
  for (auto cls : {ProblemClass::LinearScalar, ProblemClass::NonlinearScalar,
                   ProblemClass::LinearSystem, ProblemClass::LinearWave}) {
    CHECK(total_bound(cls, zero) == 0.0);
  }
  BoundInputs wave_zero;
  wave_zero.c_w = 2.8;
  CHECK(total_bound(ProblemClass::NonlinearWave, wave_zero) == 0.0);

  BoundInputs init;
  init.init_error = 0.3;
  CHECK(total_bound(ProblemClass::LinearScalar, init) == doctest::Approx(8 * 0.09));

  BoundInputs in;
  in.epsilon = 1e-2;
  in.init_error = 0.1;
  in.r1 = 0.2;
  in.theta = 0.3;
  in.final_gap = 0.4;
  in.energy_gap = 0.5;
  CHECK(total_bound(ProblemClass::LinearScalar, in) >=
        8 * 0.01 + 2 * 0.16);
  CHECK(total_bound(ProblemClass::LinearScalar, in) ==
        doctest::Approx(8 * (0.01 + 4 * 0.04 + 1e-2 * 0.09) + 2 * (0.16 + 2 * 1e-2 * 0.25)));
}

TEST_CASE("total bound is monotone in every input") {
  BoundInputs base;
  base.epsilon = 1e-3;
  base.init_error = base.r1 = base.theta = base.final_gap = base.energy_gap = 0.1;
  base.growth = 1.5;
  base.init_potential = base.init_error_v = base.r1_weighted_u = base.r1_v = 0.1;
  base.final_gap_u = base.final_gap_v = 0.1;
  base.c_w = 2.0;
  double BoundInputs::*fields[] = {&BoundInputs::init_error, &BoundInputs::r1,
                                   &BoundInputs::theta, &BoundInputs::final_gap,
                                   &BoundInputs::energy_gap};
  for (auto cls : {ProblemClass::LinearScalar, ProblemClass::NonlinearScalar,
                   ProblemClass::LinearSystem, ProblemClass::LinearWave}) {
    for (auto f : fields) {
      BoundInputs bigger = base;
      bigger.*f *= 2.0;
      CHECK(total_bound(cls, bigger) > total_bound(cls, base));
    }
  }
  double BoundInputs::*wave_fields[] = {
      &BoundInputs::init_potential, &BoundInputs::init_error_v, &BoundInputs::r1_weighted_u,
      &BoundInputs::r1_v, &BoundInputs::theta, &BoundInputs::final_gap_u,
      &BoundInputs::final_gap_v, &BoundInputs::energy_gap, &BoundInputs::growth};
  for (auto f : wave_fields) {
    BoundInputs bigger = base;
    bigger.*f *= 2.0;
    CHECK(total_bound(ProblemClass::NonlinearWave, bigger) >
          total_bound(ProblemClass::NonlinearWave, base));
  }
}

TEST_CASE("total bound rejects unusable inputs") {
  BoundInputs bad;
  bad.r1 = -1.0;
  CHECK_THROWS_AS(total_bound(ProblemClass::LinearScalar, bad), std::invalid_argument);
  bad.r1 = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(total_bound(ProblemClass::LinearScalar, bad), std::invalid_argument);
  CHECK_THROWS_AS(total_bound(ProblemClass::NonlinearWave, BoundInputs{}),
                  std::invalid_argument);
}

TEST_CASE("experimental order of convergence") {
  CHECK(eoc(0.04, 0.01, 0.2, 0.1) == doctest::Approx(2.0));
  CHECK(eoc(0.08, 0.01, 0.2, 0.1) == doctest::Approx(3.0));
  CHECK(eoc(0.05, 0.05, 0.2, 0.1) == 0.0);
  CHECK_THROWS_AS(eoc(0.0, 0.01, 0.2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(eoc(0.1, 0.01, 0.2, -0.1), std::invalid_argument);
}

TEST_CASE("true errors against a constant exact solution") {
  ProblemSpec p = steady(linear_advection_diffusion(1e-3), scalar(0.5));
  const auto mesh = mesh_for(p, 10);
  const Trajectory traj = run_simulation(p, mesh, 1, kencarp3(), 0.1, 0.3);
  const TemporalReconstruction temporal(traj);
  p.exact = [](double, double) { return scalar(0.5); };
  p.exact_dx = [](double, double) { return scalar(0.0); };
  const TrueErrors same = true_errors(traj, temporal, p, {true});
  CHECK(same.linf_l2 < 1e-13);
  CHECK(same.energy < 1e-13);
  const double c = 0.25;
  p.exact = [c](double, double) { return scalar(0.5 + c); };
  const TrueErrors shifted = true_errors(traj, temporal, p, {true});
  CHECK(shifted.linf_l2 == doctest::Approx(c * std::sqrt(2 * M_PI)).epsilon(1e-12));
  CHECK(shifted.energy < 1e-13);
  p.exact = nullptr;
  CHECK_THROWS_AS(true_errors(traj, temporal, p, {true}), std::invalid_argument);
}

TEST_CASE("report on a manufactured run is finite and self-consistent") {
  for (const std::string id : {"linear", "burgers", "wave"}) {
    const ProblemSpec p = make_problem(id, 1e-4);
    const auto mesh = mesh_for(p, 24);
    const SemiDiscreteSystem sys(p, mesh, 1, lw(0.1), default_sigma(1));
    const Trajectory traj = run_simulation(sys, kencarp3(), 0.1 * mesh->h_max(), 0.25);
    const EstimatorReport rep = estimate(sys, traj);
    CAPTURE(id);
    CHECK(rep.has_exact);
    CHECK(std::isfinite(rep.total_bound));
    CHECK(rep.total_bound > 0.0);
    CHECK(std::isfinite(rep.effectivity));
    CHECK(rep.effectivity > 0.0);
    CHECK(rep.theta_total <= rep.theta1 + rep.theta2 + rep.theta3 + 1e-14);
    CHECK(rep.r1_norm <= rep.r1_components.sum() + 1e-14);
    CHECK(rep.growth_factor >= 1.0);
    if (id == "wave") {
      CHECK(rep.c_w > 0.0);
      CHECK(rep.C_w > 0.0);
    }
  }
}

}  // TEST_SUITE
