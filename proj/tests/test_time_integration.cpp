#include <doctest.h>

#include <cmath>
#include <string>

#include "rkdg/imex.hpp"
#include "rkdg/norms.hpp"
#include "rkdg/problem.hpp"
#include "rkdg/simulation.hpp"
#include "rkdg/tableau.hpp"
#include "test_support.hpp"

using namespace rkdg;
using testing::scalar;

namespace {

// Error at t = 1 of y' = a_im y + a_ex y, y(0) = 1.
double dahlquist_error(const ImexTableau& tab, int steps, double a_ex, double a_im) {
  double y = 1.0;
  const double tau = 1.0 / steps;
  for (int n = 0; n < steps; ++n) {
    y = imex_advance(
        y, n * tau, tau, tab, [&](double v, double) { return a_ex * v; },
        [&](double v) { return a_im * v; },
        [&](double c, double b) { return b / (1.0 - c * a_im); });
  }
  return std::abs(y - std::exp(a_ex + a_im));
}

// The same with a time-dependent explicit forcing: y' = -y + cos(t) (explicit)
double forced_error(const ImexTableau& tab, int steps) {
  const double a_im = -2.0;
  double y = 1.0;
  const double tau = 1.0 / steps;
  for (int n = 0; n < steps; ++n) {
    y = imex_advance(
        y, n * tau, tau, tab, [&](double, double t) { return std::cos(t); },
        [&](double v) { return a_im * v; },
        [&](double c, double b) { return b / (1.0 - c * a_im); });
  }
  // y' = -2 y + cos t, y(0) = 1.
  const double t = 1.0;
  const double particular = (2 * std::cos(t) + std::sin(t)) / 5.0;
  return std::abs(y - (particular + (1.0 - 0.4) * std::exp(-2 * t)));
}

std::shared_ptr<const Mesh1D> mesh_for(const ProblemSpec& p, std::size_t n) {
  return std::make_shared<const Mesh1D>(build_uniform_mesh(n, p.domain));
}

}  // namespace

TEST_SUITE("time_integration") {

TEST_CASE("built-in tableaus validate") {
  CHECK_NOTHROW(ars111().validate());
  CHECK_NOTHROW(kencarp3().validate());
  CHECK(ars111().order == 1);
  CHECK(kencarp3().order == 3);
  CHECK(kencarp3().stages() == 4);
}

TEST_CASE("bundled data file matches the built-in third-order tableau") {
  const ImexTableau file = load_tableau_file(std::string(RKDG_TEST_DATA_DIR) +
                                             "/tableaus/kencarp3.txt");
  const ImexTableau builtin = kencarp3();
  CHECK(file.a_ex == builtin.a_ex);
  CHECK(file.a_im == builtin.a_im);
  CHECK(file.b_ex == builtin.b_ex);
  CHECK(file.b_im == builtin.b_im);
  CHECK(file.c_ex == builtin.c_ex);
  CHECK(file.c_im == builtin.c_im);
  const ImexTableau a = load_tableau_file(std::string(RKDG_TEST_DATA_DIR) +
                                          "/tableaus/ars111.txt");
  CHECK(a.a_im == ars111().a_im);
}

TEST_CASE("tableau text round-trips through the formatter") {
  const ImexTableau t = parse_tableau(format_tableau(kencarp3()));
  CHECK((t.a_ex - kencarp3().a_ex).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t.b_im - kencarp3().b_im).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed tableaus are rejected") {
  CHECK_THROWS_AS(parse_tableau("ORDER\n1\nA_EX\n0\n"), std::invalid_argument);
  ImexTableau t = ars111();
  t.c_ex[1] = 0.5;  // row sum mismatch
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  t = ars111();
  t.a_ex(0, 0) = 0.1;  // explicit part must be strictly lower triangular
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  CHECK_THROWS(resolve_tableau("no-such-tableau"));
}

TEST_CASE("Dahlquist order matches the tableau order") {
  for (const ImexTableau& tab : {ars111(), kencarp3()}) {
    const double e1 = dahlquist_error(tab, 40, 0.5, -1.5);
    const double e2 = dahlquist_error(tab, 80, 0.5, -1.5);
    CHECK(std::log2(e1 / e2) == doctest::Approx(tab.order).epsilon(0.1 / tab.order));
    const double f1 = forced_error(tab, 40);
    const double f2 = forced_error(tab, 80);
    CHECK(std::log2(f1 / f2) == doctest::Approx(tab.order).epsilon(0.1 / tab.order));
  }
}

TEST_CASE("inviscid step with forward/backward Euler is explicit Euler") {
  const ProblemSpec p = linear_advection_diffusion(0.0);
  const auto mesh = mesh_for(p, 16);
  const SemiDiscreteSystem sys(p, mesh, 2, FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1),
                               default_sigma(2));
  ImplicitDiffusionSolver solver(sys.sip());
  const DGFunction u = testing::random_dg(mesh, 2, 1, 3);
  const double tau = 0.01;
  const DGFunction next = imex_step(u, 0.0, tau, ars111(), sys, solver);
  DGFunction expected = u;
  expected.axpy(-tau, sys.convection().apply(u));
  CHECK((next.vector() - expected.vector()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("constant state without source is an equilibrium") {
  const ProblemSpec p = linear_advection_diffusion(1e-3);
  const auto mesh = mesh_for(p, 8);
  const SemiDiscreteSystem sys(p, mesh, 1, FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1),
                               default_sigma(1));
  ImplicitDiffusionSolver solver(sys.sip());
  const DGFunction u = l2_project([](double) { return scalar(0.4); }, mesh, 1, 1);
  const DGFunction next = imex_step(u, 0.0, 0.05, kencarp3(), sys, solver);
  CHECK((next.vector() - u.vector()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("one step changes the mass by the integrated source") {
  const ProblemSpec p = viscous_burgers(1e-2);
  const auto mesh = mesh_for(p, 12);
  const SemiDiscreteSystem sys(p, mesh, 2, FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1),
                               default_sigma(2));
  ImplicitDiffusionSolver solver(sys.sip());
  const ImexTableau tab = kencarp3();
  const DGFunction u = l2_project(p.initial, mesh, 2, 1);
  const double t = 0.13, tau = 0.02;
  const DGFunction next = imex_step(u, t, tau, tab, sys, solver);
  double expected = integral(u)[0];
  for (int i = 0; i < tab.stages(); ++i) {
    expected += tau * tab.b_ex[i] * integral(sys.projected_source(t + tab.c_ex[i] * tau))[0];
  }
  CHECK(integral(next)[0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("zero data stays zero and constants stay constant") {
  ProblemSpec p = linear_advection_diffusion(1e-4);
  p.initial = [](double) { return scalar(0.0); };
  const auto mesh = mesh_for(p, 10);
  const Trajectory zero = run_simulation(p, mesh, 2, kencarp3(), 0.1, 0.2);
  for (const auto& s : zero.states) CHECK(s.vector().cwiseAbs().maxCoeff() == 0.0);
  p.initial = [](double) { return scalar(2.5); };
  const Trajectory c = run_simulation(p, mesh, 2, kencarp3(), 0.1, 0.2);
  const DGFunction c0 = c.states.front();
  for (const auto& s : c.states) {
    CHECK((s.vector() - c0.vector()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("trajectory lands on T and conserves mass without a source") {
  const ProblemSpec p = linear_advection_diffusion(1e-3);
  const auto mesh = mesh_for(p, 16);
  const Trajectory traj = run_simulation(p, mesh, 1, kencarp3(), 0.1, 0.33);
  CHECK_NOTHROW(traj.validate());
  CHECK(traj.times.back() == 0.33);
  CHECK(traj.states.size() == traj.times.size());
  CHECK(traj.rhs.size() == traj.times.size());
  const double m0 = integral(traj.states.front())[0];
  const double mN = integral(traj.states.back())[0];
  // sin x has zero mean, so compare against the state scale.
  CHECK(std::abs(mN - m0) < 1e-10 * std::max(1.0, std::abs(m0)));
}

TEST_CASE("runs are bitwise deterministic") {
  const ProblemSpec p = viscous_burgers(1e-3);
  const auto mesh = mesh_for(p, 16);
  const Trajectory a = run_simulation(p, mesh, 2, kencarp3(), 0.05, 0.1);
  const Trajectory b = run_simulation(p, mesh, 2, kencarp3(), 0.05, 0.1);
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t n = 0; n < a.states.size(); ++n) {
    CHECK(a.states[n].vector() == b.states[n].vector());
  }
}

TEST_CASE("linear advection converges at second order for q = 1") {
  const ProblemSpec p = linear_advection_diffusion(1e-8);
  double prev = 0.0;
  for (std::size_t n : {32, 64}) {
    const auto mesh = mesh_for(p, n);
    const Trajectory traj = run_simulation(p, mesh, 1, kencarp3(), 0.1, 0.5);
    const double t = traj.times.back();
    const double err = l2_distance(traj.states.back(), [&](double x) { return p.exact(t, x); });
    if (prev > 0.0) CHECK(std::log2(prev / err) > 1.5);
    prev = err;
  }
}

TEST_CASE("default parameters follow dt = factor * h, lambda = dt / h_min, sigma = 10 q^2") {
  const Mesh1D mesh = build_uniform_mesh(20, {0.0, 2.0 * M_PI});
  const SimulationParameters s = resolve_parameters(mesh, 2, 0.1, {});
  CHECK(s.dt == doctest::Approx(0.1 * mesh.h_max()));
  CHECK(s.lambda == doctest::Approx(s.dt / mesh.h_min()));
  CHECK(s.sigma == doctest::Approx(40.0));
}

}  // TEST_SUITE
