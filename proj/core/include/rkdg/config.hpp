#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rkdg {

/// Parameters of a convergence study.
struct StudyConfig {
  std::string problem = "linear";
  std::vector<double> eps = {1e-8};
  std::vector<int> degrees = {1};
  std::vector<std::size_t> elements = {64, 128, 256, 512};
  double dt_factor = 0.1;
  double final_time = 0.5;
  std::string flux = "lw";
  std::optional<double> lambda;  ///< defaults to dt / h_min per run
  std::optional<double> sigma;   ///< defaults to 10 q^2 per run
  std::string tableau = "kencarp3";
  std::string out = "out";
  int jobs = 1;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// Parse `key = value` lines; '#' and ';' start comments, `[section]`
/// headers are ignored. Throws std::invalid_argument on malformed lines.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Apply one setting by key (list values are comma separated). Throws
/// std::invalid_argument for unknown keys or unparsable values.
void apply_setting(StudyConfig& cfg, const std::string& key,
                   const std::string& value);

StudyConfig config_from_text(const std::string& text, StudyConfig base = {});
/// Throws std::runtime_error when the file cannot be read.
StudyConfig load_config(const std::string& path, StudyConfig base = {});

std::vector<double> parse_double_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::vector<std::size_t> parse_size_list(const std::string& text);

/// Every setting, defaults included, as ordered key/value pairs.
std::vector<std::pair<std::string, std::string>> config_entries(
    const StudyConfig& cfg);
/// Write `key=value` lines. Throws std::runtime_error on I/O failure.
void write_metadata(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

/// Shortest round-trip decimal form of a double ("nan", "inf", "-inf" for
/// non-finite values).
std::string format_double(double v);
/// Inverse of format_double; throws std::invalid_argument.
double parse_double(const std::string& text);

}  // namespace rkdg
