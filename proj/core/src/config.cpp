#include "rkdg/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rkdg/flux.hpp"
#include "rkdg/problem.hpp"

namespace rkdg {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return out;
}

long long parse_integer(const std::string& text) {
  long long v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return v;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const char* begin = text.data();
  if (!text.empty() && text[0] == '+') ++begin;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not a number: '" + raw + "'");
  }
  return v;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) out.push_back(parse_double(s));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) out.push_back(static_cast<int>(parse_integer(s)));
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& s : split_list(text)) {
    const long long v = parse_integer(s);
    if (v < 0) throw std::invalid_argument("negative count: '" + s + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void StudyConfig::validate() const {
  const auto ids = builtin_problem_ids();
  if (std::find(ids.begin(), ids.end(), problem) == ids.end()) {
    throw std::invalid_argument("unknown problem '" + problem + "'");
  }
  if (eps.empty() || degrees.empty() || elements.empty()) {
    throw std::invalid_argument("eps, q and elements lists must be nonempty");
  }
  for (double e : eps) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("eps must be finite and >= 0");
    }
  }
  for (int q : degrees) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 2) throw std::invalid_argument("element counts must be >= 2");
    if (i > 0 && elements[i] <= elements[i - 1]) {
      throw std::invalid_argument("element counts must be strictly ascending");
    }
  }
  if (!(dt_factor > 0.0) || !std::isfinite(dt_factor)) {
    throw std::invalid_argument("dt_factor must be > 0");
  }
  if (!(final_time > 0.0) || !std::isfinite(final_time)) {
    throw std::invalid_argument("T must be > 0");
  }
  parse_flux_kind(flux);
  if (lambda && !(*lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (sigma && !(*sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (tableau.empty()) throw std::invalid_argument("tableau must be set");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto cut = line.find_first_of("#;");
    if (cut != std::string::npos) line.erase(cut);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key");
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_setting(StudyConfig& cfg, const std::string& raw_key,
                   const std::string& value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "problem") {
    cfg.problem = value;
  } else if (key == "eps") {
    cfg.eps = parse_double_list(value);
  } else if (key == "q") {
    cfg.degrees = parse_int_list(value);
  } else if (key == "elements") {
    cfg.elements = parse_size_list(value);
  } else if (key == "dt_factor") {
    cfg.dt_factor = parse_double(value);
  } else if (key == "T") {
    cfg.final_time = parse_double(value);
  } else if (key == "flux") {
    cfg.flux = value;
  } else if (key == "lambda") {
    if (value == "auto") cfg.lambda.reset(); else cfg.lambda = parse_double(value);
  } else if (key == "sigma") {
    if (value == "auto") cfg.sigma.reset(); else cfg.sigma = parse_double(value);
  } else if (key == "tableau") {
    cfg.tableau = value;
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "jobs") {
    cfg.jobs = static_cast<int>(parse_integer(value));
  } else {
    throw std::invalid_argument("unknown config key '" + raw_key + "'");
  }
}

StudyConfig config_from_text(const std::string& text, StudyConfig base) {
  for (const auto& [k, v] : parse_key_values(text)) apply_setting(base, k, v);
  return base;
}

StudyConfig load_config(const std::string& path, StudyConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_text(ss.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_entries(
    const StudyConfig& cfg) {
  return {
      {"problem", cfg.problem},
      {"eps", join(cfg.eps)},
      {"q", join(cfg.degrees)},
      {"elements", join(cfg.elements)},
      {"dt_factor", format_double(cfg.dt_factor)},
      {"T", format_double(cfg.final_time)},
      {"flux", to_string(parse_flux_kind(cfg.flux))},
      {"lambda", cfg.lambda ? format_double(*cfg.lambda) : "dt/h_min"},
      {"sigma", cfg.sigma ? format_double(*cfg.sigma) : "10*q^2"},
      {"tableau", cfg.tableau},
      {"out", cfg.out},
      {"jobs", std::to_string(cfg.jobs)},
  };
}

void write_metadata(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write metadata file '" + path + "'");
  for (const auto& [k, v] : entries) out << k << '=' << v << '\n';
  if (!out) throw std::runtime_error("error writing metadata file '" + path + "'");
}

}  // namespace rkdg
