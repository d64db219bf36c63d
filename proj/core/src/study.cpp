#include "rkdg/study.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>
#include <vector>

#include "rkdg/mesh.hpp"
#include "rkdg/problem.hpp"
#include "rkdg/simulation.hpp"
#include "rkdg/tableau.hpp"

namespace rkdg {
namespace {

void mark_failed(TableRow& row, const std::string& message) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  row.failed = true;
  row.message = message;
  row.err_linf_l2 = row.err_energy = row.r1_l1l2 = row.theta_l2 = nan;
  row.bound_total = row.effectivity = nan;
  row.mass_drift = nan;
}

}  // namespace

CaseResult run_case(const StudyConfig& cfg, double eps, int q, std::size_t N) {
  CaseResult result;
  TableRow& row = result.row;
  row.problem = cfg.problem;
  row.eps = eps;
  row.q = q;
  row.N = N;
  try {
    const ProblemSpec problem = make_problem(cfg.problem, eps);
    row.source_free = !problem.has_source();
    auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(N, problem.domain));
    SimulationOptions opts;
    opts.flux = parse_flux_kind(cfg.flux);
    opts.lambda = cfg.lambda;
    opts.sigma = cfg.sigma;
    const SimulationParameters params =
        resolve_parameters(*mesh, q, cfg.dt_factor, opts);
    row.h = mesh->h_max();
    row.dt = params.dt;
    const ImexTableau tableau = resolve_tableau(cfg.tableau);
    const SemiDiscreteSystem system(problem, mesh, q,
                                    FluxScheme(opts.flux, params.lambda),
                                    params.sigma);
    const Trajectory traj = run_simulation(system, tableau, params.dt, cfg.final_time);
    const EstimatorReport rep = estimate(system, traj);
    row.err_linf_l2 = rep.true_error_linf_l2;
    row.err_energy = rep.true_error_energy;
    row.r1_l1l2 = rep.r1_norm;
    row.theta_l2 = rep.theta_total;
    row.bound_total = rep.total_bound;
    row.effectivity = rep.effectivity;
    row.mass_drift = rep.mass_drift;
    row.theta_diffusing = rep.theta_total;
    for (int c = 0; c < problem.components; ++c) {
      row.err_components.push_back(rep.true_error_components[c]);
    }
    for (double v : {row.r1_l1l2, row.theta_l2, row.bound_total}) {
      if (!std::isfinite(v)) throw std::runtime_error("non-finite estimator value");
    }
    result.report = rep;
  } catch (const std::exception& e) {
    mark_failed(row, e.what());
    result.report.reset();
  }
  return result;
}

ConvergenceTable run_study(const StudyConfig& cfg) {
  cfg.validate();
  resolve_tableau(cfg.tableau);  // fail fast on a bad tableau

  std::vector<std::tuple<double, int, std::size_t>> cases;
  for (double eps : cfg.eps) {
    for (int q : cfg.degrees) {
      for (std::size_t N : cfg.elements) cases.emplace_back(eps, q, N);
    }
  }
  ConvergenceTable table;
  table.rows.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto [eps, q, N] = cases[i];
      table.rows[i] = run_case(cfg, eps, q, N).row;
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), cases.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  table.compute_eoc();
  return table;
}

}  // namespace rkdg
