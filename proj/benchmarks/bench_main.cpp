#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "rkdg/convection.hpp"
#include "rkdg/diffusion.hpp"
#include "rkdg/estimators.hpp"
#include "rkdg/problem.hpp"
#include "rkdg/simulation.hpp"
#include "rkdg/spatial_reconstruction.hpp"

using namespace rkdg;

namespace {

std::shared_ptr<const Mesh1D> mesh_of(std::size_t n) {
  return std::make_shared<const Mesh1D>(build_uniform_mesh(n, {0.0, 2.0 * M_PI}));
}

DGFunction random_state(const std::shared_ptr<const Mesh1D>& mesh, int q, int m) {
  std::mt19937 rng(1);
  std::normal_distribution<double> d(0.0, 1.0);
  DGFunction f(mesh, q, m);
  for (double& c : f.coefficients()) c = d(rng);
  return f;
}

void BM_Convection(benchmark::State& state) {
  const auto mesh = mesh_of(state.range(0));
  const ProblemSpec p = viscous_burgers(0.0);
  const ConvectionOperator op(2, FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1), p.flux);
  const DGFunction u = random_state(mesh, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(u));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Convection)->RangeMultiplier(4)->Range(64, 4096);

void BM_SipApply(benchmark::State& state) {
  const auto mesh = mesh_of(state.range(0));
  const SipOperator sip(mesh, 2, default_sigma(2));
  const DGFunction u = random_state(mesh, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sip.apply(u, {true}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SipApply)->RangeMultiplier(4)->Range(64, 4096);

void BM_ImplicitSolve(benchmark::State& state) {
  const auto mesh = mesh_of(state.range(0));
  const SipOperator sip(mesh, 2, default_sigma(2));
  ImplicitDiffusionSolver solver(sip);
  const DGFunction b = random_state(mesh, 2, 1);
  solver.solve(1e-3, b, {true});  // factorize once
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(1e-3, b, {true}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ImplicitSolve)->RangeMultiplier(4)->Range(64, 4096);

void BM_SpatialReconstruction(benchmark::State& state) {
  const auto mesh = mesh_of(state.range(0));
  const ProblemSpec p = nonlinear_wave(0.0);
  const SpatialReconstructor rec(FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1), p.flux);
  DGFunction v = random_state(mesh, 2, 2);
  for (std::size_t k = 0; k < mesh->num_elements(); ++k) v(k, 0, 0) += 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(rec.reconstruct(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpatialReconstruction)->RangeMultiplier(4)->Range(64, 4096);

void BM_ImexStep(benchmark::State& state) {
  const auto mesh = mesh_of(state.range(0));
  const ProblemSpec p = viscous_burgers(1e-3);
  const SemiDiscreteSystem sys(p, mesh, 2, FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1),
                               default_sigma(2));
  ImplicitDiffusionSolver solver(sys.sip());
  const ImexTableau tab = kencarp3();
  const DGFunction u = l2_project(p.initial, mesh, 2, 1);
  const double tau = 0.1 * mesh->h_max();
  for (auto _ : state) benchmark::DoNotOptimize(imex_step(u, 0.0, tau, tab, sys, solver));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ImexStep)->RangeMultiplier(4)->Range(64, 4096);

void BM_EstimateRun(benchmark::State& state) {
  const ProblemSpec p = linear_advection_diffusion(1e-8);
  const auto mesh = mesh_of(state.range(0));
  const SemiDiscreteSystem sys(p, mesh, 1, FluxScheme(FluxScheme::Kind::LaxWendroff, 0.1),
                               default_sigma(1));
  const Trajectory traj = run_simulation(sys, kencarp3(), 0.1 * mesh->h_max(), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(estimate(sys, traj));
}
BENCHMARK(BM_EstimateRun)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
