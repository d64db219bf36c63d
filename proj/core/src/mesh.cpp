#include "rkdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rkdg {

Mesh1D::Mesh1D(std::vector<double> nodes, bool periodic, double max_regularity)
    : nodes_(std::move(nodes)), periodic_(periodic) {
  if (nodes_.size() < 3) {
    throw std::invalid_argument("Mesh1D: need at least two elements");
  }
  const std::size_t m = nodes_.size() - 1;
  element_sizes_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double h = nodes_[k + 1] - nodes_[k];
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw std::invalid_argument("Mesh1D: nodes must be strictly increasing");
    }
    element_sizes_[k] = h;
  }
  const auto [lo, hi] =
      std::minmax_element(element_sizes_.begin(), element_sizes_.end());
  h_min_ = *lo;
  h_max_ = *hi;
  if (h_max_ / h_min_ > max_regularity) {
    throw std::invalid_argument("Mesh1D: regularity ratio " +
                                std::to_string(h_max_ / h_min_) +
                                " exceeds bound " +
                                std::to_string(max_regularity));
  }

  node_sizes_.resize(num_nodes());
  for (std::size_t i = 0; i < node_sizes_.size(); ++i) {
    const bool has_left = i > 0 || periodic_;
    const bool has_right = i < m || periodic_;
    const double left = has_left ? element_sizes_[(i + m - 1) % m] : 0.0;
    const double right = has_right ? element_sizes_[i % m] : 0.0;
    // One-sided boundary nodes take the size of their single element.
    node_sizes_[i] = (has_left && has_right) ? 0.5 * (left + right)
                                             : std::max(left, right);
  }
}

long Mesh1D::node_index(double x) const {
  const double tol = 1e-13 * (nodes_.back() - nodes_.front());
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x - tol);
  if (it != nodes_.end() && std::abs(*it - x) <= tol) {
    return static_cast<long>(it - nodes_.begin());
  }
  return -1;
}

std::size_t Mesh1D::locate(double x, Side side) const {
  const double tol = 1e-13 * (nodes_.back() - nodes_.front());
  if (!(x >= nodes_.front() - tol && x <= nodes_.back() + tol)) {
    throw std::out_of_range("Mesh1D::locate: x=" + std::to_string(x) +
                            " outside the domain");
  }
  const std::size_t m = num_elements();
  const long node = node_index(x);
  if (node >= 0) {
    const auto i = static_cast<std::size_t>(node);
    switch (side) {
      case Side::Interior:
        throw std::invalid_argument(
            "Mesh1D::locate: x is a node; a side (left/right) is required");
      case Side::Left:
        if (i == 0) {
          if (!periodic_) throw std::out_of_range("no element left of x_0");
          return m - 1;
        }
        return i - 1;
      case Side::Right:
        if (i == m) {
          if (!periodic_) throw std::out_of_range("no element right of x_M");
          return 0;
        }
        return i;
    }
  }
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

Mesh1D build_uniform_mesh(std::size_t num_elements, Interval domain,
                          bool periodic) {
  if (num_elements < 2) {
    throw std::invalid_argument("build_uniform_mesh: need M >= 2");
  }
  if (!(domain.length() > 0.0)) {
    throw std::invalid_argument("build_uniform_mesh: empty domain");
  }
  std::vector<double> nodes(num_elements + 1);
  const double h = domain.length() / static_cast<double>(num_elements);
  for (std::size_t k = 0; k <= num_elements; ++k) {
    nodes[k] = domain.lo + h * static_cast<double>(k);
  }
  nodes.back() = domain.hi;
  return Mesh1D(std::move(nodes), periodic);
}

}  // namespace rkdg
