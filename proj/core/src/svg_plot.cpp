#include "rkdg/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rkdg/config.hpp"

namespace rkdg {
namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 170.0, kTop = 40.0, kBottom = 50.0;

struct Series {
  std::string label;
  std::string color;
  std::string dash;
  std::vector<std::pair<double, double>> points;
};

struct Metric {
  const char* name;
  const char* color;
  std::function<double(const TableRow&)> get;
};

const std::vector<Metric>& metrics() {
  static const std::vector<Metric> m = {
      {"err_linf_l2", "#1f77b4", [](const TableRow& r) { return r.err_linf_l2; }},
      {"err_energy", "#ff7f0e", [](const TableRow& r) { return r.err_energy; }},
      {"r1_l1l2", "#2ca02c", [](const TableRow& r) { return r.r1_l1l2; }},
      {"theta_l2", "#d62728", [](const TableRow& r) { return r.theta_l2; }},
  };
  return m;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string render_convergence_svg(const ConvergenceTable& table,
                                   const std::string& problem, int q) {
  std::vector<const TableRow*> rows;
  for (const auto& r : table.rows) {
    if (r.problem == problem && r.q == q && !r.failed) rows.push_back(&r);
  }
  if (rows.empty()) {
    throw std::invalid_argument("no rows for " + problem + " q=" + std::to_string(q));
  }
  std::set<double> eps_values;
  for (const auto* r : rows) eps_values.insert(r->eps);
  static const char* dashes[] = {"", "6,3", "2,2", "8,3,2,3"};

  std::vector<Series> series;
  std::size_t e_index = 0;
  for (double eps : eps_values) {
    for (const auto& m : metrics()) {
      Series s;
      s.label = std::string(m.name) + " eps=" + format_double(eps);
      s.color = m.color;
      s.dash = dashes[e_index % 4];
      for (const auto* r : rows) {
        if (r->eps != eps) continue;
        const double y = m.get(*r);
        if (r->h > 0.0 && y > 0.0 && std::isfinite(y)) s.points.emplace_back(r->h, y);
      }
      std::sort(s.points.begin(), s.points.end());
      if (!s.points.empty()) series.push_back(std::move(s));
    }
    ++e_index;
  }

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, std::log10(x));
      xmax = std::max(xmax, std::log10(x));
      ymin = std::min(ymin, std::log10(y));
      ymax = std::max(ymax, std::log10(y));
    }
  }
  if (series.empty()) {
    xmin = ymin = -1.0;
    xmax = ymax = 0.0;
  }
  xmin = std::floor(xmin);
  xmax = std::max(std::ceil(xmax), xmin + 1.0);
  ymin = std::floor(ymin);
  ymax = std::max(std::ceil(ymax), ymin + 1.0);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double lx) { return kLeft + (lx - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double ly) { return kTop + (ymax - ly) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"22\" font-size=\"14\">" << problem
     << ", q = " << q << "</text>\n";
  for (double d = xmin; d <= xmax + 0.5; d += 1.0) {
    os << "<line x1=\"" << num(px(d)) << "\" y1=\"" << kTop << "\" x2=\"" << num(px(d))
       << "\" y2=\"" << kTop + ph << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << num(px(d)) << "\" y=\"" << kTop + ph + 16
       << "\" text-anchor=\"middle\">1e" << static_cast<int>(d) << "</text>\n";
  }
  for (double d = ymin; d <= ymax + 0.5; d += 1.0) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << num(py(d)) << "\" x2=\"" << kLeft + pw
       << "\" y2=\"" << num(py(d)) << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(py(d) + 4)
       << "\" text-anchor=\"end\">1e" << static_cast<int>(d) << "</text>\n";
  }
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\">h</text>\n";

  double ly = kTop + 8;
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
    os << " points=\"";
    for (const auto& [x, y] : s.points) {
      os << num(px(std::log10(x))) << ',' << num(py(std::log10(y))) << ' ';
    }
    os << "\"/>\n";
    for (const auto& [x, y] : s.points) {
      os << "<circle cx=\"" << num(px(std::log10(x))) << "\" cy=\""
         << num(py(std::log10(y))) << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
    }
    const double lx = kLeft + pw + 10;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 18
       << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
    os << "/>\n<text x=\"" << lx + 22 << "\" y=\"" << ly + 4 << "\">" << s.label
       << "</text>\n";
    ly += 15;
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::string> emit_plots(const ConvergenceTable& table,
                                    const std::string& directory) {
  if (table.rows.empty()) throw std::invalid_argument("cannot plot an empty table");
  std::set<std::pair<std::string, int>> keys;
  for (const auto& r : table.rows) {
    if (!r.failed) keys.emplace(r.problem, r.q);
  }
  std::vector<std::string> paths;
  for (const auto& [problem, q] : keys) {
    const std::string path =
        (std::filesystem::path(directory) / (problem + "_q" + std::to_string(q) + ".svg"))
            .string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << render_convergence_svg(table, problem, q);
    if (!out) throw std::runtime_error("error writing '" + path + "'");
    paths.push_back(path);
  }
  return paths;
}

}  // namespace rkdg
