#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rkdg/config.hpp"
#include "rkdg/study.hpp"
#include "rkdg/svg_plot.hpp"
#include "rkdg/table_io.hpp"

using namespace rkdg;
namespace fs = std::filesystem;

namespace {

StudyConfig small_config() {
  StudyConfig cfg;
  cfg.problem = "linear";
  cfg.eps = {1e-6};
  cfg.degrees = {1, 2};
  cfg.elements = {8, 16, 32};
  cfg.final_time = 0.2;
  cfg.jobs = 2;
  return cfg;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rkdg_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config text with overrides") {
  const StudyConfig cfg = config_from_text(
      "# study\n[study]\nproblem = burgers\neps = 1e-6, 1e-8\nq = 1,2\n"
      "elements = 16,32\ndt-factor = 0.033 ; inline comment\nT = 0.25\n"
      "flux = lf\nlambda = 0.5\ntableau = ars111\njobs = 3\n");
  CHECK(cfg.problem == "burgers");
  CHECK(cfg.eps == std::vector<double>{1e-6, 1e-8});
  CHECK(cfg.degrees == std::vector<int>{1, 2});
  CHECK(cfg.elements == std::vector<std::size_t>{16, 32});
  CHECK(cfg.dt_factor == 0.033);
  CHECK(cfg.final_time == 0.25);
  CHECK(cfg.lambda == 0.5);
  CHECK_FALSE(cfg.sigma.has_value());
  CHECK(cfg.jobs == 3);
  CHECK_NOTHROW(cfg.validate());
  StudyConfig over = cfg;
  apply_setting(over, "elements", "64");
  CHECK(over.elements == std::vector<std::size_t>{64});
}

TEST_CASE("invalid configs are rejected") {
  CHECK_THROWS_AS(config_from_text("bogus = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_text("no equals sign\n"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_text("q = one\n"), std::invalid_argument);
  StudyConfig cfg;
  cfg.elements = {32, 16};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.elements = {1, 16};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = StudyConfig{};
  cfg.final_time = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = StudyConfig{};
  cfg.dt_factor = -0.1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = StudyConfig{};
  cfg.problem = "euler";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("metadata echoes defaulted values") {
  const auto entries = config_entries(StudyConfig{});
  auto find = [&](const std::string& k) {
    for (const auto& [key, v] : entries) {
      if (key == k) return v;
    }
    return std::string("<missing>");
  };
  CHECK(find("lambda") == "dt/h_min");
  CHECK(find("sigma") == "10*q^2");
  CHECK(find("dt_factor") == "0.1");
  CHECK(find("tableau") == "kencarp3");
  const fs::path dir = scratch_dir("meta");
  write_metadata((dir / "m.txt").string(), entries);
  const std::string text = read_file(dir / "m.txt");
  CHECK(text.find("problem=linear\n") != std::string::npos);
  CHECK(config_from_text("eps = " + find("eps")).eps == StudyConfig{}.eps);
}

TEST_CASE("shortest round-trip float formatting") {
  for (double v : {0.1, 1e-8, 3.0, 0.033, 1.0 / 3.0, 6.02e23, -2.5e-300}) {
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(std::isnan(parse_double(format_double(std::nan("")))));
  CHECK_THROWS_AS(parse_double("1.5x"), std::invalid_argument);
}

TEST_CASE("one triple gives one row with empty EOC cells") {
  StudyConfig cfg = small_config();
  cfg.degrees = {1};
  cfg.elements = {16};
  const ConvergenceTable table = run_study(cfg);
  REQUIRE(table.rows.size() == 1);
  const std::string csv = format_csv(table);
  std::stringstream ss(csv);
  std::string header, row, extra;
  std::getline(ss, header);
  std::getline(ss, row);
  CHECK_FALSE(std::getline(ss, extra));
  CHECK(header ==
        "problem,eps,q,N,h,dt,err_linf_l2,err_energy,r1_l1l2,theta_l2,bound_total,"
        "effectivity,eoc_err,eoc_energy,eoc_r1,eoc_theta");
  CHECK(row.size() > 4);
  CHECK(row.substr(row.size() - 4) == ",,,,");
}

TEST_CASE("empty tables cannot be emitted") {
  CHECK_THROWS_AS(format_csv(ConvergenceTable{}), std::invalid_argument);
  CHECK_THROWS_AS(emit_plots(ConvergenceTable{}, "."), std::invalid_argument);
}

TEST_CASE("study rows are sorted, EOC-filled and round-trip through CSV") {
  const ConvergenceTable table = run_study(small_config());
  REQUIRE(table.rows.size() == 6);
  CHECK(table.rows[0].q == 1);
  CHECK(table.rows[0].N == 8);
  CHECK_FALSE(table.rows[0].eoc_err.has_value());
  CHECK(table.rows[1].eoc_err.has_value());
  CHECK_FALSE(table.rows[3].eoc_err.has_value());  // first row of q = 2
  CHECK_FALSE(table.any_failed());
  for (const auto& r : table.rows) {
    CHECK(r.source_free);
    CHECK(r.mass_drift <= 1e-10);
  }
  const ConvergenceTable back = parse_csv(format_csv(table));
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    CHECK(same_csv_fields(back.rows[i], table.rows[i]));
  }
  CHECK(format_csv(back) == format_csv(table));
}

TEST_CASE("reruns produce byte-identical CSV files regardless of job count") {
  const fs::path dir = scratch_dir("determinism");
  StudyConfig a = small_config();
  a.jobs = 1;
  StudyConfig b = small_config();
  b.jobs = 3;
  emit_csv(run_study(a), (dir / "a.csv").string());
  emit_csv(run_study(b), (dir / "b.csv").string());
  emit_csv(run_study(b), (dir / "c.csv").string());
  const std::string ta = read_file(dir / "a.csv");
  CHECK(ta == read_file(dir / "b.csv"));
  CHECK(ta == read_file(dir / "c.csv"));
  CHECK(read_csv((dir / "a.csv").string()).rows.size() == 6);
}

TEST_CASE("failed runs become marked rows") {
  StudyConfig cfg = small_config();
  cfg.degrees = {1};
  cfg.elements = {8, 16};
  cfg.dt_factor = 40.0;  // far beyond the explicit stability limit
  cfg.final_time = 6000.0;
  const ConvergenceTable table = run_study(cfg);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.any_failed());
  for (const auto& r : table.rows) {
    if (!r.failed) continue;
    CHECK(std::isnan(r.err_linf_l2));
    CHECK_FALSE(r.message.empty());
  }
  const std::string audit = format_audit_csv(table);
  CHECK(audit.find(",failed,") != std::string::npos);
  const ConvergenceTable back = parse_csv(format_csv(table));
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    CHECK(back.rows[i].failed == table.rows[i].failed);
  }
}

TEST_CASE("unwritable paths raise I/O errors") {
  ConvergenceTable t;
  TableRow r;
  r.problem = "linear";
  t.rows.push_back(r);
  CHECK_THROWS_AS(emit_csv(t, "/nonexistent-dir/sub/out.csv"), std::runtime_error);
  CHECK_THROWS_AS(emit_plots(t, "/nonexistent-dir/sub"), std::runtime_error);
}

TEST_CASE("one SVG per (problem, q)") {
  const ConvergenceTable table = run_study(small_config());
  const fs::path dir = scratch_dir("plots");
  const auto paths = emit_plots(table, dir.string());
  REQUIRE(paths.size() == 2);
  const std::string svg = read_file(paths[0]);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("err_linf_l2") != std::string::npos);
  CHECK(svg.find("theta_l2") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
}

}  // TEST_SUITE
