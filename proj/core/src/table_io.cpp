#include "rkdg/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rkdg/config.hpp"
#include "rkdg/estimators.hpp"

namespace rkdg {
namespace {

bool same_double(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

bool same_optional(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_double(*a, *b);
}

std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::optional<double> eoc_or_empty(double ec, double ef, double hc, double hf) {
  if (!(ec > 0.0) || !(ef > 0.0) || !std::isfinite(ec) || !std::isfinite(ef)) {
    return std::nullopt;
  }
  return eoc(ec, ef, hc, hf);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

bool same_csv_fields(const TableRow& a, const TableRow& b) {
  return a.problem == b.problem && same_double(a.eps, b.eps) && a.q == b.q &&
         a.N == b.N && same_double(a.h, b.h) && same_double(a.dt, b.dt) &&
         same_double(a.err_linf_l2, b.err_linf_l2) &&
         same_double(a.err_energy, b.err_energy) &&
         same_double(a.r1_l1l2, b.r1_l1l2) &&
         same_double(a.theta_l2, b.theta_l2) &&
         same_double(a.bound_total, b.bound_total) &&
         same_double(a.effectivity, b.effectivity) &&
         same_optional(a.eoc_err, b.eoc_err) &&
         same_optional(a.eoc_energy, b.eoc_energy) &&
         same_optional(a.eoc_r1, b.eoc_r1) &&
         same_optional(a.eoc_theta, b.eoc_theta);
}

void ConvergenceTable::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.problem, a.eps, a.q, a.N) < std::tie(b.problem, b.eps, b.q, b.N);
  });
}

void ConvergenceTable::compute_eoc() {
  sort();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    TableRow& r = rows[i];
    r.eoc_err = r.eoc_energy = r.eoc_r1 = r.eoc_theta = std::nullopt;
    if (i == 0) continue;
    const TableRow& p = rows[i - 1];
    if (p.problem != r.problem || p.eps != r.eps || p.q != r.q) continue;
    if (p.failed || r.failed || p.h == r.h) continue;
    r.eoc_err = eoc_or_empty(p.err_linf_l2, r.err_linf_l2, p.h, r.h);
    r.eoc_energy = eoc_or_empty(p.err_energy, r.err_energy, p.h, r.h);
    r.eoc_r1 = eoc_or_empty(p.r1_l1l2, r.r1_l1l2, p.h, r.h);
    r.eoc_theta = eoc_or_empty(p.theta_l2, r.theta_l2, p.h, r.h);
  }
}

bool ConvergenceTable::any_failed() const {
  return std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.failed; });
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "problem", "eps",        "q",           "N",        "h",
      "dt",      "err_linf_l2", "err_energy", "r1_l1l2",  "theta_l2",
      "bound_total", "effectivity", "eoc_err", "eoc_energy", "eoc_r1",
      "eoc_theta"};
  return cols;
}

std::string format_csv(const ConvergenceTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("cannot emit an empty table");
  std::string out;
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (const TableRow& r : table.rows) {
    const std::vector<std::string> cells = {
        r.problem,
        format_double(r.eps),
        std::to_string(r.q),
        std::to_string(r.N),
        format_double(r.h),
        format_double(r.dt),
        format_double(r.err_linf_l2),
        format_double(r.err_energy),
        format_double(r.r1_l1l2),
        format_double(r.theta_l2),
        format_double(r.bound_total),
        format_double(r.effectivity),
        cell(r.eoc_err),
        cell(r.eoc_energy),
        cell(r.eoc_r1),
        cell(r.eoc_theta)};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  }
  return out;
}

ConvergenceTable parse_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line)) throw std::invalid_argument("empty CSV");
  if (split_csv_line(line) != csv_columns()) {
    throw std::invalid_argument("unexpected CSV header");
  }
  ConvergenceTable table;
  auto opt = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return parse_double(s);
  };
  while (std::getline(ss, line)) {
    if (line.empty() || line == "\r") continue;
    const auto c = split_csv_line(line);
    if (c.size() != csv_columns().size()) {
      throw std::invalid_argument("CSV row has wrong number of cells");
    }
    TableRow r;
    r.problem = c[0];
    r.eps = parse_double(c[1]);
    r.q = static_cast<int>(parse_double(c[2]));
    r.N = static_cast<std::size_t>(parse_double(c[3]));
    r.h = parse_double(c[4]);
    r.dt = parse_double(c[5]);
    r.err_linf_l2 = parse_double(c[6]);
    r.err_energy = parse_double(c[7]);
    r.r1_l1l2 = parse_double(c[8]);
    r.theta_l2 = parse_double(c[9]);
    r.bound_total = parse_double(c[10]);
    r.effectivity = parse_double(c[11]);
    r.eoc_err = opt(c[12]);
    r.eoc_energy = opt(c[13]);
    r.eoc_r1 = opt(c[14]);
    r.eoc_theta = opt(c[15]);
    r.failed = std::isnan(r.r1_l1l2) && std::isnan(r.bound_total);
    table.rows.push_back(std::move(r));
  }
  if (table.rows.empty()) throw std::invalid_argument("CSV has no rows");
  return table;
}

void emit_csv(const ConvergenceTable& table, const std::string& path) {
  write_file(path, format_csv(table));
}

ConvergenceTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

std::string format_audit_csv(const ConvergenceTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("cannot emit an empty table");
  std::string out = "problem,eps,q,N,status,source_free,mass_drift,message\n";
  for (const TableRow& r : table.rows) {
    std::string msg = r.message;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    out += r.problem + ',' + format_double(r.eps) + ',' + std::to_string(r.q) +
           ',' + std::to_string(r.N) + ',' + (r.failed ? "failed" : "ok") + ',' +
           (r.source_free ? "1" : "0") + ',' + format_double(r.mass_drift) + ',' +
           msg + '\n';
  }
  return out;
}

void emit_audit_csv(const ConvergenceTable& table, const std::string& path) {
  write_file(path, format_audit_csv(table));
}

}  // namespace rkdg
