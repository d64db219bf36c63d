#include "rkdg/dg_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "rkdg/legendre.hpp"

namespace rkdg {
namespace {

constexpr int kMaxBasis = 16;

}  // namespace

DGFunction::DGFunction(std::shared_ptr<const Mesh1D> mesh, int degree,
                       int components)
    : mesh_(std::move(mesh)), degree_(degree), components_(components) {
  if (!mesh_) throw std::invalid_argument("DGFunction: null mesh");
  if (degree < 0 || degree + 1 > kMaxBasis) {
    throw std::invalid_argument("DGFunction: unsupported degree");
  }
  if (components < 1 || components > kMaxComponents) {
    throw std::invalid_argument("DGFunction: unsupported component count");
  }
  coeffs_.assign(mesh_->num_elements() * (degree + 1) * components, 0.0);
}

State DGFunction::value_at(std::size_t k, double xi) const {
  std::array<double, kMaxBasis> p{};
  legendre_all(degree_, xi, std::span<double>(p.data(), num_basis()));
  const double inv_sqrt_h = 1.0 / std::sqrt(mesh_->element_size(k));
  State out = State::Zero(components_);
  for (int j = 0; j < num_basis(); ++j) {
    const double phi = basis_scale(j) * p[j] * inv_sqrt_h;
    for (int c = 0; c < components_; ++c) out[c] += (*this)(k, j, c) * phi;
  }
  return out;
}

State DGFunction::derivative_at(std::size_t k, double xi) const {
  std::array<double, kMaxBasis> p{};
  std::array<double, kMaxBasis> d{};
  legendre_all(degree_, xi, std::span<double>(p.data(), num_basis()),
               std::span<double>(d.data(), num_basis()));
  const double h = mesh_->element_size(k);
  const double scale = 2.0 / (h * std::sqrt(h));
  State out = State::Zero(components_);
  for (int j = 0; j < num_basis(); ++j) {
    const double dphi = basis_scale(j) * d[j] * scale;
    for (int c = 0; c < components_; ++c) out[c] += (*this)(k, j, c) * dphi;
  }
  return out;
}

State DGFunction::evaluate(double x, Side side) const {
  const std::size_t k = mesh_->locate(x, side);
  const long node = mesh_->node_index(x);
  double xi = mesh_->to_reference(k, x);
  if (node >= 0) xi = (side == Side::Left) ? 1.0 : -1.0;
  return value_at(k, std::clamp(xi, -1.0, 1.0));
}

State DGFunction::evaluate_dx(double x, Side side) const {
  const std::size_t k = mesh_->locate(x, side);
  const long node = mesh_->node_index(x);
  double xi = mesh_->to_reference(k, x);
  if (node >= 0) xi = (side == Side::Left) ? 1.0 : -1.0;
  return derivative_at(k, std::clamp(xi, -1.0, 1.0));
}

State DGFunction::trace(std::size_t node, Side side) const {
  const std::size_t m = num_elements();
  node %= m;
  if (side == Side::Left) return value_at((node + m - 1) % m, 1.0);
  if (side == Side::Right) return value_at(node, -1.0);
  throw std::invalid_argument("DGFunction::trace: side must be left or right");
}

State DGFunction::trace_dx(std::size_t node, Side side) const {
  const std::size_t m = num_elements();
  node %= m;
  if (side == Side::Left) return derivative_at((node + m - 1) % m, 1.0);
  if (side == Side::Right) return derivative_at(node, -1.0);
  throw std::invalid_argument("DGFunction::trace_dx: side must be left or right");
}

bool DGFunction::same_space(const DGFunction& other) const {
  if (degree_ != other.degree_ || components_ != other.components_) return false;
  if (mesh_ == other.mesh_) return true;
  if (!mesh_ || !other.mesh_) return false;
  const auto a = mesh_->nodes();
  const auto b = other.mesh_->nodes();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

void DGFunction::require_same_space(const DGFunction& other) const {
  if (!same_space(other)) {
    throw std::invalid_argument("DGFunction: mismatched mesh/degree/components");
  }
}

DGFunction& DGFunction::operator+=(const DGFunction& other) {
  require_same_space(other);
  vector() += other.vector();
  return *this;
}

DGFunction& DGFunction::operator-=(const DGFunction& other) {
  require_same_space(other);
  vector() -= other.vector();
  return *this;
}

DGFunction& DGFunction::operator*=(double s) {
  vector() *= s;
  return *this;
}

DGFunction& DGFunction::axpy(double a, const DGFunction& other) {
  require_same_space(other);
  vector() += a * other.vector();
  return *this;
}

void DGFunction::set_zero() { std::fill(coeffs_.begin(), coeffs_.end(), 0.0); }

std::pair<State, State> jump_avg(const DGFunction& f, std::size_t node) {
  if (node > f.num_elements()) {
    throw std::out_of_range("jump_avg: node index out of range");
  }
  const State left = f.trace(node, Side::Left);
  const State right = f.trace(node, Side::Right);
  return {left - right, 0.5 * (left + right)};
}

DGFunction l2_project(const PointFunction& g,
                      const std::shared_ptr<const Mesh1D>& mesh, int degree,
                      int components, int num_points) {
  DGFunction out(mesh, degree, components);
  const ReferenceElement ref(degree, num_points > 0 ? num_points : degree + 3);
  for (std::size_t k = 0; k < mesh->num_elements(); ++k) {
    const double h = mesh->element_size(k);
    // (h/2) w_g * phi_j = (h/2) w_g * s_j P_j / sqrt(h) = 0.5 sqrt(h) w_g s_j P_j
    const double scale = 0.5 * std::sqrt(h);
    for (std::size_t q = 0; q < ref.rule.size(); ++q) {
      const State val = g(mesh->from_reference(k, ref.rule.points[q]));
      if (val.size() != components) {
        throw std::invalid_argument("l2_project: component count mismatch");
      }
      const double w = scale * ref.rule.weights[q];
      for (int j = 0; j <= degree; ++j) {
        for (int c = 0; c < components; ++c) {
          out(k, j, c) += w * ref.values[q][j] * val[c];
        }
      }
    }
  }
  return out;
}

DGFunction raise_degree(const DGFunction& f, int new_degree) {
  if (new_degree < f.degree()) {
    throw std::invalid_argument("raise_degree: new degree is lower");
  }
  DGFunction out(f.mesh_ptr(), new_degree, f.components());
  for (std::size_t k = 0; k < f.num_elements(); ++k) {
    for (int j = 0; j <= f.degree(); ++j) {
      for (int c = 0; c < f.components(); ++c) out(k, j, c) = f(k, j, c);
    }
  }
  return out;
}

}  // namespace rkdg
