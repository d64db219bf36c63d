#pragma once

#include <string>
#include <vector>

#include "rkdg/table_io.hpp"

namespace rkdg {

/// Log-log plot of h against err_linf_l2, err_energy, r1_l1l2 and theta_l2
/// for one (problem, q); one polyline per (series, eps). Non-positive or
/// non-finite values are skipped. Throws std::invalid_argument when no
/// row matches.
std::string render_convergence_svg(const ConvergenceTable& table,
                                   const std::string& problem, int q);

/// Write `<problem>_q<q>.svg` for every (problem, q) in the table into
/// `directory` and return the paths. Throws std::invalid_argument for an
/// empty table and std::runtime_error on I/O failure.
std::vector<std::string> emit_plots(const ConvergenceTable& table,
                                    const std::string& directory);

}  // namespace rkdg
