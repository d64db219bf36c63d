#pragma once

#include <map>
#include <memory>
#include <vector>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "rkdg/dg_function.hpp"

namespace rkdg {

/// Constant diagonal diffusion eps * diag(mask) with SIP penalty sigma on the
/// diffusing components. Non-diffusing components get sigma = 0.
struct DiffusionConfig {
  double epsilon = 0.0;
  std::vector<bool> mask;
  double sigma = 10.0;

  void validate(int components) const;
  bool any() const;
};

/// Standard SIP penalty 10 q^2 (q >= 1).
double default_sigma(int degree);

/// Symmetric interior penalty operator A_h on a periodic mesh:
///   -(A_h u, psi) = sum_K (u', psi')_K
///                   - sum_i ( [psi]_i {u'}_i + [u]_i {psi'}_i
///                             - sigma / h_i [u]_i [psi]_i ).
/// The same scalar matrix acts on every masked component; with an
/// orthonormal basis A_h u is just this matrix times the coefficients.
class SipOperator {
 public:
  SipOperator(std::shared_ptr<const Mesh1D> mesh, int degree, double sigma);

  /// A_h(u) on masked components, zero elsewhere (epsilon not applied).
  DGFunction apply(const DGFunction& u, const std::vector<bool>& mask) const;

  /// Scalar operator matrix, dofs ordered element-major then basis index.
  const Eigen::SparseMatrix<double>& matrix() const { return matrix_; }
  int degree() const { return degree_; }
  double sigma() const { return sigma_; }
  const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }

 private:
  std::shared_ptr<const Mesh1D> mesh_;
  int degree_;
  double sigma_;
  Eigen::SparseMatrix<double> matrix_;
};

DGFunction apply_Ah(const DGFunction& u, const DiffusionConfig& diff);

/// Solves (Id - c A_h) x = b for masked components, identity elsewhere.
/// Factorizations are cached per distinct c; one solver belongs to one run.
class ImplicitDiffusionSolver {
 public:
  explicit ImplicitDiffusionSolver(const SipOperator& op) : op_(&op) {}

  DGFunction solve(double c, const DGFunction& rhs,
                   const std::vector<bool>& mask);
  std::size_t cached_factorizations() const { return cache_.size(); }

 private:
  using Factorization = Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>;
  const Factorization& factor(double c);

  const SipOperator* op_;
  std::map<double, std::unique_ptr<Factorization>> cache_;
};

}  // namespace rkdg
