#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rkdg/mesh.hpp"
#include "rkdg/state.hpp"

namespace rkdg {

/// Member of (V_q^s)^m: per element, per basis function, per component
/// coefficients in the element-orthonormal Legendre basis.
///
/// Storage is element-major, then basis index, then component, so one
/// element's data is contiguous.
class DGFunction {
 public:
  DGFunction() = default;
  DGFunction(std::shared_ptr<const Mesh1D> mesh, int degree, int components);

  const Mesh1D& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }
  int degree() const { return degree_; }
  int components() const { return components_; }
  int num_basis() const { return degree_ + 1; }
  std::size_t num_elements() const { return mesh_->num_elements(); }
  std::size_t size() const { return coeffs_.size(); }

  std::size_t index(std::size_t k, int j, int c) const {
    return (k * static_cast<std::size_t>(num_basis()) + j) * components_ + c;
  }
  double& operator()(std::size_t k, int j, int c) { return coeffs_[index(k, j, c)]; }
  double operator()(std::size_t k, int j, int c) const {
    return coeffs_[index(k, j, c)];
  }

  std::span<double> coefficients() { return coeffs_; }
  std::span<const double> coefficients() const { return coeffs_; }
  Eigen::Map<Eigen::VectorXd> vector() {
    return {coeffs_.data(), static_cast<Eigen::Index>(coeffs_.size())};
  }
  Eigen::Map<const Eigen::VectorXd> vector() const {
    return {coeffs_.data(), static_cast<Eigen::Index>(coeffs_.size())};
  }

  /// Value inside element k at reference coordinate xi in [-1, 1].
  State value_at(std::size_t k, double xi) const;
  /// Physical x-derivative inside element k at reference coordinate xi.
  State derivative_at(std::size_t k, double xi) const;

  /// Point evaluation; `side` selects the one-sided limit at nodes.
  State evaluate(double x, Side side = Side::Interior) const;
  State evaluate_dx(double x, Side side = Side::Interior) const;

  /// One-sided limit at node i: Left is f(x_i^-), Right is f(x_i^+).
  /// Node indices wrap periodically.
  State trace(std::size_t node, Side side) const;
  State trace_dx(std::size_t node, Side side) const;

  bool same_space(const DGFunction& other) const;

  DGFunction& operator+=(const DGFunction& other);
  DGFunction& operator-=(const DGFunction& other);
  DGFunction& operator*=(double s);
  /// this += a * other
  DGFunction& axpy(double a, const DGFunction& other);
  void set_zero();

  friend DGFunction operator+(DGFunction a, const DGFunction& b) { return a += b; }
  friend DGFunction operator-(DGFunction a, const DGFunction& b) { return a -= b; }
  friend DGFunction operator*(double s, DGFunction a) { return a *= s; }

 private:
  void require_same_space(const DGFunction& other) const;

  std::shared_ptr<const Mesh1D> mesh_;
  int degree_ = 0;
  int components_ = 0;
  std::vector<double> coeffs_;
};

/// Jump [f]_i = f(x_i^-) - f(x_i^+) and average {f}_i at a periodic node.
std::pair<State, State> jump_avg(const DGFunction& f, std::size_t node);

using PointFunction = std::function<State(double)>;

/// L2 projection onto (V_q^s)^m using a Gauss rule with `num_points` points
/// per element (defaults to q + 3).
DGFunction l2_project(const PointFunction& g,
                      const std::shared_ptr<const Mesh1D>& mesh, int degree,
                      int components, int num_points = 0);

/// Re-express f in a higher-degree space (pads zero coefficients).
DGFunction raise_degree(const DGFunction& f, int new_degree);

}  // namespace rkdg
