// Command-line front end: single runs, convergence studies, plots and
// problem validation.

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rkdg/config.hpp"
#include "rkdg/problem.hpp"
#include "rkdg/study.hpp"
#include "rkdg/svg_plot.hpp"
#include "rkdg/table_io.hpp"

namespace fs = std::filesystem;
using namespace rkdg;

namespace {

// Raw flag values; anything set overrides the config file.
struct StudyFlags {
  std::string config;
  std::vector<std::pair<std::string, std::string>> overrides;

  void add(CLI::App* app, const std::string& flag, const std::string& key,
           const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { overrides.emplace_back(key, v); },
        help);
  }

  void attach(CLI::App* app) {
    app->add_option("--config", config, "key = value config file");
    add(app, "--problem", "problem", "problem id: linear, burgers, wave");
    add(app, "--eps", "eps", "diffusion coefficients (comma list)");
    add(app, "--q", "q", "polynomial degrees (comma list)");
    add(app, "--elements", "elements", "element counts (comma list, ascending)");
    add(app, "--dt-factor", "dt_factor", "dt = dt_factor * h");
    add(app, "--T", "T", "final time");
    add(app, "--flux", "flux", "numerical flux: lw or lf");
    add(app, "--lambda", "lambda", "flux parameter (default dt / h_min)");
    add(app, "--sigma", "sigma", "penalty (default 10 q^2)");
    add(app, "--tableau", "tableau", "kencarp3, ars111 or a tableau file");
    add(app, "--out", "out", "output directory");
    add(app, "--jobs", "jobs", "parallel runs");
  }

  StudyConfig resolve() const {
    StudyConfig cfg = config.empty() ? StudyConfig{} : load_config(config);
    for (const auto& [k, v] : overrides) apply_setting(cfg, k, v);
    cfg.validate();
    return cfg;
  }
};

std::string opt_cell(const std::optional<double>& v) {
  if (!v) return "      -";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%7.3f", *v);
  return buf;
}

void print_table(const ConvergenceTable& table) {
  std::printf("%-8s %-8s %2s %5s %11s %11s %11s %11s %11s %9s %7s %7s %7s %7s\n",
              "problem", "eps", "q", "N", "err_l2", "err_energy", "r1", "theta",
              "bound", "effect.", "eoc_e", "eoc_E", "eoc_r1", "eoc_th");
  for (const auto& r : table.rows) {
    if (r.failed) {
      std::printf("%-8s %-8.1e %2d %5zu  FAILED: %s\n", r.problem.c_str(), r.eps,
                  r.q, r.N, r.message.c_str());
      continue;
    }
    std::printf(
        "%-8s %-8.1e %2d %5zu %11.4e %11.4e %11.4e %11.4e %11.4e %9.3g %s %s %s %s\n",
        r.problem.c_str(), r.eps, r.q, r.N, r.err_linf_l2, r.err_energy, r.r1_l1l2,
        r.theta_l2, r.bound_total, r.effectivity, opt_cell(r.eoc_err).c_str(),
        opt_cell(r.eoc_energy).c_str(), opt_cell(r.eoc_r1).c_str(),
        opt_cell(r.eoc_theta).c_str());
  }
}

int cmd_run(const StudyFlags& flags) {
  const StudyConfig cfg = flags.resolve();
  if (cfg.eps.size() != 1 || cfg.degrees.size() != 1 || cfg.elements.size() != 1) {
    throw CLI::ValidationError("run takes a single --eps, --q and --elements value");
  }
  const CaseResult res = run_case(cfg, cfg.eps[0], cfg.degrees[0], cfg.elements[0]);
  const TableRow& r = res.row;
  std::cout << "problem=" << r.problem << "\neps=" << format_double(r.eps)
            << "\nq=" << r.q << "\nN=" << r.N << "\nh=" << format_double(r.h)
            << "\ndt=" << format_double(r.dt) << '\n';
  if (r.failed) {
    std::cout << "status=failed\nmessage=" << r.message << '\n';
    return 1;
  }
  const EstimatorReport& e = *res.report;
  const std::vector<std::pair<std::string, double>> fields = {
      {"err_linf_l2", e.true_error_linf_l2},
      {"err_energy", e.true_error_energy},
      {"r1_l1l2", e.r1_norm},
      {"r1_weighted_u", e.r1_weighted_u},
      {"theta1", e.theta1},
      {"theta2", e.theta2},
      {"theta3", e.theta3},
      {"theta_l2", e.theta_total},
      {"init_error", e.init_error},
      {"init_potential", e.init_potential},
      {"final_gap", e.final_gap},
      {"energy_gap", e.energy_gap},
      {"growth_factor", e.growth_factor},
      {"entropy_K", e.entropy_K},
      {"c_W", e.c_w},
      {"C_W", e.C_w},
      {"dx_sup", e.dx_sup},
      {"bound_total", e.total_bound},
      {"true_lhs", e.true_lhs},
      {"effectivity", e.effectivity},
      {"mass_drift", e.mass_drift},
  };
  for (const auto& [k, v] : fields) std::cout << k << '=' << format_double(v) << '\n';
  for (int c = 0; c < e.true_error_components.size(); ++c) {
    std::cout << "err_linf_l2_c" << c << '='
              << format_double(e.true_error_components[c]) << '\n';
    std::cout << "r1_l1l2_c" << c << '=' << format_double(e.r1_components[c]) << '\n';
  }
  std::cout << "status=ok\n";
  return 0;
}

int cmd_convergence(const StudyFlags& flags) {
  const StudyConfig cfg = flags.resolve();
  fs::create_directories(cfg.out);
  const ConvergenceTable table = run_study(cfg);
  const fs::path dir(cfg.out);
  emit_csv(table, (dir / "convergence.csv").string());
  emit_audit_csv(table, (dir / "audit.csv").string());
  write_metadata((dir / "metadata.txt").string(), config_entries(cfg));
  const auto plots = emit_plots(table, cfg.out);
  print_table(table);
  std::cout << "wrote " << (dir / "convergence.csv").string() << ", "
            << plots.size() << " plot(s)\n";
  return table.any_failed() ? 1 : 0;
}

int cmd_plot(const std::string& in, const std::string& out) {
  fs::create_directories(out);
  const ConvergenceTable table = read_csv(in);
  for (const auto& p : emit_plots(table, out)) std::cout << p << '\n';
  return 0;
}

int cmd_validate(const std::string& problem, double eps, double T) {
  std::vector<std::string> ids =
      problem.empty() ? builtin_problem_ids() : std::vector<std::string>{problem};
  bool ok = true;
  for (const auto& id : ids) {
    const ProblemSpec p = make_problem(id, eps);
    p.validate();
    for (const auto& c : validate_problem(p, T)) {
      std::printf("%s %-8s %-24s max_error=%.3e tol=%.1e\n",
                  c.passed() ? "PASS" : "FAIL", id.c_str(), c.name.c_str(),
                  c.max_error, c.tolerance);
      ok = ok && c.passed();
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rkdg: IMEX Runge-Kutta DG solver with a posteriori estimators"};
  app.require_subcommand(1);

  StudyFlags run_flags, conv_flags;
  auto* run = app.add_subcommand("run", "single (problem, eps, q, N) case");
  run_flags.attach(run);
  auto* conv = app.add_subcommand("convergence", "full refinement study");
  conv_flags.attach(conv);

  std::string plot_in, plot_out = ".";
  auto* plot = app.add_subcommand("plot", "convergence CSV to SVG plots");
  plot->add_option("--in", plot_in, "convergence CSV")->required();
  plot->add_option("--out", plot_out, "output directory");

  std::string val_problem;
  double val_eps = 1e-6, val_T = 0.5;
  auto* validate = app.add_subcommand("validate", "oracle checks of problem data");
  validate->add_option("--problem", val_problem, "problem id (default: all)");
  validate->add_option("--eps", val_eps, "diffusion coefficient");
  validate->add_option("--T", val_T, "final time");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(run_flags);
    if (*conv) return cmd_convergence(conv_flags);
    if (*plot) return cmd_plot(plot_in, plot_out);
    if (*validate) return cmd_validate(val_problem, val_eps, val_T);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
