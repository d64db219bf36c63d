#pragma once

#include <cstddef>
#include <optional>

#include "rkdg/config.hpp"
#include "rkdg/estimators.hpp"
#include "rkdg/table_io.hpp"

namespace rkdg {

/// Outcome of one (eps, q, N) run.
struct CaseResult {
  TableRow row;
  std::optional<EstimatorReport> report;  ///< empty when the run failed
};

/// Build the mesh, simulate with dt = dt_factor * h, reconstruct and
/// estimate. Failures (divergence, bad parameters) come back as a failed
/// row with NaN metrics instead of an exception.
CaseResult run_case(const StudyConfig& cfg, double eps, int q, std::size_t N);

/// Every (eps, q, N) of the config on up to cfg.jobs threads. Rows are
/// sorted and EOC columns filled, so the result does not depend on
/// scheduling. Throws std::invalid_argument for an invalid config.
ConvergenceTable run_study(const StudyConfig& cfg);

}  // namespace rkdg
