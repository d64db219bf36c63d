#pragma once

#include <Eigen/Core>

namespace rkdg {

/// Upper bound on the number of PDE components; keeps point states on the
/// stack.
inline constexpr int kMaxComponents = 4;

using State = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor,
                            kMaxComponents, 1>;
using Jacobian = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                              Eigen::ColMajor, kMaxComponents, kMaxComponents>;

}  // namespace rkdg
