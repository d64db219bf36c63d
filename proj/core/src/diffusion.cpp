#include "rkdg/diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include "rkdg/legendre.hpp"

namespace rkdg {

void DiffusionConfig::validate(int components) const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("DiffusionConfig: epsilon must be >= 0");
  }
  if (static_cast<int>(mask.size()) != components) {
    throw std::invalid_argument("DiffusionConfig: mask size mismatch");
  }
  if (any() && !(sigma > 0.0)) {
    throw std::invalid_argument("DiffusionConfig: sigma must be > 0");
  }
}

bool DiffusionConfig::any() const {
  for (bool b : mask) {
    if (b) return true;
  }
  return false;
}

double default_sigma(int degree) {
  const int q = degree < 1 ? 1 : degree;
  return 10.0 * q * q;
}

SipOperator::SipOperator(std::shared_ptr<const Mesh1D> mesh, int degree,
                         double sigma)
    : mesh_(std::move(mesh)), degree_(degree), sigma_(sigma) {
  if (!mesh_->periodic()) {
    throw std::invalid_argument("SipOperator: only periodic meshes supported");
  }
  const std::size_t m = mesh_->num_elements();
  const int nb = degree + 1;
  const auto n = static_cast<Eigen::Index>(m * nb);
  const ReferenceElement ref(degree, degree + 3);

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(m * nb * nb * 5);

  // Bilinear form B; the operator is -B.
  for (std::size_t k = 0; k < m; ++k) {
    const double h = mesh_->element_size(k);
    const double scale = 2.0 / (h * h);
    for (int j = 0; j < nb; ++j) {
      for (int l = 0; l < nb; ++l) {
        double s = 0.0;
        for (std::size_t g = 0; g < ref.rule.size(); ++g) {
          s += ref.rule.weights[g] * ref.derivs[g][j] * ref.derivs[g][l];
        }
        trips.emplace_back(k * nb + j, k * nb + l, -scale * s);
      }
    }
  }

  std::vector<Eigen::Index> dof(2 * nb);
  std::vector<double> jv(2 * nb), dv(2 * nb);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t left = (i + m - 1) % m;
    const double hl = mesh_->element_size(left);
    const double hr = mesh_->element_size(i);
    for (int j = 0; j < nb; ++j) {
      dof[j] = static_cast<Eigen::Index>(left * nb + j);
      jv[j] = ref.right_values[j] / std::sqrt(hl);
      dv[j] = 0.5 * ref.right_derivs[j] * 2.0 / (hl * std::sqrt(hl));
      dof[nb + j] = static_cast<Eigen::Index>(i * nb + j);
      jv[nb + j] = -ref.left_values[j] / std::sqrt(hr);
      dv[nb + j] = 0.5 * ref.left_derivs[j] * 2.0 / (hr * std::sqrt(hr));
    }
    const double penalty = sigma_ / mesh_->node_size(i);
    for (int a = 0; a < 2 * nb; ++a) {
      for (int b = 0; b < 2 * nb; ++b) {
        const double bab =
            -(jv[a] * dv[b] + jv[b] * dv[a]) + penalty * jv[a] * jv[b];
        trips.emplace_back(dof[a], dof[b], -bab);
      }
    }
  }
  matrix_.resize(n, n);
  matrix_.setFromTriplets(trips.begin(), trips.end());
  matrix_.makeCompressed();
}

DGFunction SipOperator::apply(const DGFunction& u,
                              const std::vector<bool>& mask) const {
  if (u.degree() != degree_ || u.num_elements() != mesh_->num_elements()) {
    throw std::invalid_argument("SipOperator::apply: space mismatch");
  }
  const int nc = u.components();
  DGFunction out(u.mesh_ptr(), u.degree(), nc);
  const auto n = matrix_.rows();
  Eigen::VectorXd in(n), res(n);
  for (int c = 0; c < nc; ++c) {
    if (!mask[c]) continue;
    for (Eigen::Index r = 0; r < n; ++r) in[r] = u.coefficients()[r * nc + c];
    res.noalias() = matrix_ * in;
    for (Eigen::Index r = 0; r < n; ++r) out.coefficients()[r * nc + c] = res[r];
  }
  return out;
}

DGFunction apply_Ah(const DGFunction& u, const DiffusionConfig& diff) {
  diff.validate(u.components());
  return SipOperator(u.mesh_ptr(), u.degree(), diff.sigma).apply(u, diff.mask);
}

const ImplicitDiffusionSolver::Factorization& ImplicitDiffusionSolver::factor(
    double c) {
  auto it = cache_.find(c);
  if (it != cache_.end()) return *it->second;
  const auto n = op_->matrix().rows();
  Eigen::SparseMatrix<double> id(n, n);
  id.setIdentity();
  Eigen::SparseMatrix<double> system = id - c * op_->matrix();
  auto fac = std::make_unique<Factorization>(system);
  if (fac->info() != Eigen::Success) {
    throw std::runtime_error("ImplicitDiffusionSolver: singular stage system");
  }
  return *cache_.emplace(c, std::move(fac)).first->second;
}

DGFunction ImplicitDiffusionSolver::solve(double c, const DGFunction& rhs,
                                          const std::vector<bool>& mask) {
  DGFunction out = rhs;
  if (c == 0.0) return out;
  const Factorization& fac = factor(c);
  const int nc = rhs.components();
  const auto n = op_->matrix().rows();
  Eigen::VectorXd b(n);
  for (int comp = 0; comp < nc; ++comp) {
    if (!mask[comp]) continue;
    for (Eigen::Index r = 0; r < n; ++r) b[r] = rhs.coefficients()[r * nc + comp];
    const Eigen::VectorXd x = fac.solve(b);
    for (Eigen::Index r = 0; r < n; ++r) out.coefficients()[r * nc + comp] = x[r];
  }
  return out;
}

}  // namespace rkdg
