#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rkdg {

/// Closed interval [lo, hi] of the real line.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

/// Which one-sided limit to take when evaluating at a mesh node.
enum class Side { Left, Right, Interior };

/// Partition x_0 < x_1 < ... < x_M of an interval.
///
/// Element k is (x_k, x_{k+1}) with size h_{k+1/2}; node i carries the
/// averaged size h_i = (h_{i-1/2} + h_{i+1/2}) / 2, wrapping around when the
/// mesh is periodic. Only periodic meshes are used by the solver, but the
/// type keeps the flag so the node-size convention is explicit.
class Mesh1D {
 public:
  static constexpr double kDefaultRegularity = 10.0;

  Mesh1D(std::vector<double> nodes, bool periodic,
         double max_regularity = kDefaultRegularity);

  std::size_t num_elements() const { return nodes_.size() - 1; }
  /// Number of distinct interface nodes: M when periodic, M+1 otherwise.
  std::size_t num_nodes() const {
    return periodic_ ? num_elements() : nodes_.size();
  }
  bool periodic() const { return periodic_; }

  std::span<const double> nodes() const { return nodes_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double element_size(std::size_t k) const { return element_sizes_[k]; }
  double node_size(std::size_t i) const { return node_sizes_[i]; }
  std::span<const double> element_sizes() const { return element_sizes_; }
  std::span<const double> node_sizes() const { return node_sizes_; }

  double h_max() const { return h_max_; }
  double h_min() const { return h_min_; }
  double regularity() const { return h_max_ / h_min_; }
  Interval domain() const { return {nodes_.front(), nodes_.back()}; }

  double element_center(std::size_t k) const {
    return 0.5 * (nodes_[k] + nodes_[k + 1]);
  }
  /// Reference coordinate in [-1, 1] of x within element k.
  double to_reference(std::size_t k, double x) const {
    return (2.0 * (x - nodes_[k]) / element_sizes_[k]) - 1.0;
  }
  double from_reference(std::size_t k, double xi) const {
    return element_center(k) + 0.5 * element_sizes_[k] * xi;
  }

  /// Locate the element that owns x for the requested side.
  ///
  /// Throws std::out_of_range outside the closed domain and
  /// std::invalid_argument when x sits on a node with Side::Interior.
  /// On a periodic mesh x_0 from the left resolves to the last element.
  std::size_t locate(double x, Side side) const;

  /// Node index if x coincides with a node (within roundoff), else -1.
  long node_index(double x) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> element_sizes_;
  std::vector<double> node_sizes_;
  bool periodic_;
  double h_max_ = 0.0;
  double h_min_ = 0.0;
};

/// M equal elements on `domain`. Throws std::invalid_argument when M < 2 or
/// the domain is empty.
Mesh1D build_uniform_mesh(std::size_t num_elements, Interval domain,
                          bool periodic = true);

}  // namespace rkdg
