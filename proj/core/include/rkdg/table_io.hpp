#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rkdg {

/// One (problem, eps, q, N) run of a convergence study.
struct TableRow {
  std::string problem;
  double eps = 0.0;
  int q = 0;
  std::size_t N = 0;
  double h = 0.0;
  double dt = 0.0;
  double err_linf_l2 = 0.0;
  double err_energy = 0.0;
  double r1_l1l2 = 0.0;
  double theta_l2 = 0.0;
  double bound_total = 0.0;
  double effectivity = 0.0;
  std::optional<double> eoc_err, eoc_energy, eoc_r1, eoc_theta;

  // Audit data, kept out of the main CSV.
  bool failed = false;
  std::string message;
  double mass_drift = 0.0;
  bool source_free = false;
  /// Wave runs: per-component errors and the diffusing-component theta.
  std::vector<double> err_components;
  double theta_diffusing = 0.0;
};

/// Equality of the CSV-visible fields; NaN compares equal to NaN.
bool same_csv_fields(const TableRow& a, const TableRow& b);

struct ConvergenceTable {
  std::vector<TableRow> rows;

  /// Sort by (problem, eps, q, N).
  void sort();
  /// Fill EOC columns against the previous N in each (problem, eps, q)
  /// group; the first row of a group and rows next to a failed run stay
  /// empty. Sorts first.
  void compute_eoc();
  bool any_failed() const;
};

/// Exact header of the study CSV.
const std::vector<std::string>& csv_columns();

/// Throws std::invalid_argument for an empty table.
std::string format_csv(const ConvergenceTable& table);
/// Throws std::invalid_argument on a malformed table.
ConvergenceTable parse_csv(const std::string& text);

/// Throws std::invalid_argument for an empty table and std::runtime_error
/// when the path cannot be written.
void emit_csv(const ConvergenceTable& table, const std::string& path);
ConvergenceTable read_csv(const std::string& path);

/// problem, eps, q, N, status, source_free, mass_drift, message.
std::string format_audit_csv(const ConvergenceTable& table);
void emit_audit_csv(const ConvergenceTable& table, const std::string& path);

}  // namespace rkdg
