#include "dg1d/dg_solution.hpp"

#include <cassert>
#include <cmath>

#include "dg1d/errors.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

DGSolution::DGSolution(std::shared_ptr<const Mesh1D> mesh,
                       std::shared_ptr<const Basis> basis,
                       std::shared_ptr<const ConservationLaw> law, double time)
    : mesh_(std::move(mesh)),
      basis_(std::move(basis)),
      law_(std::move(law)),
      time_(time) {
  coeffs_.assign(static_cast<std::size_t>(num_elements()) * basis_size() *
                     components(),
                 0.0);
}

DGSolution DGSolution::project(std::shared_ptr<const Mesh1D> mesh,
                               std::shared_ptr<const Basis> basis,
                               std::shared_ptr<const ConservationLaw> law,
                               const std::function<State(double)>& fields) {
  DGSolution sol(std::move(mesh), std::move(basis), std::move(law));
  const Basis& b = sol.basis();
  const int p = b.size();
  const int m = sol.components();
  const QuadratureRule rule = gauss_legendre_rule(b.degree() + 3);

  Eigen::MatrixXd rhs(p, m);
  for (int k = 0; k < sol.num_elements(); ++k) {
    // Project the deviation from the element-center value: identical in
    // exact arithmetic, but constants land exactly on constant coefficient
    // vectors instead of picking up M^{-1}-amplified round-off.
    const State ref = fields(sol.mesh().element_center(k));
    assert(ref.size() == m);
    rhs.setZero();
    for (int q = 0; q < rule.size(); ++q) {
      const double xi = rule.nodes[q];
      const State w = fields(sol.mesh().to_physical(k, xi));
      for (int j = 0; j < p; ++j) {
        const double wpsi = rule.weights[q] * b.evaluate(j, xi);
        for (int c = 0; c < m; ++c) rhs(j, c) += wpsi * (w[c] - ref[c]);
      }
    }
    const Eigen::MatrixXd coeff = b.mass_inverse() * rhs;
    const Eigen::VectorXd& one = b.constant_one();
    for (int j = 0; j < p; ++j) {
      for (int c = 0; c < m; ++c) {
        sol.coeff(k, j, c) = coeff(j, c) + ref[c] * one[j];
      }
    }
  }
  return sol;
}

State DGSolution::coeff_state(int k, int j) const {
  State w(components());
  for (int c = 0; c < components(); ++c) w[c] = coeff(k, j, c);
  return w;
}

void DGSolution::set_coeff_state(int k, int j, const State& w) {
  for (int c = 0; c < components(); ++c) coeff(k, j, c) = w[c];
}

State DGSolution::evaluate(int k, double xi) const {
  State out(components());
  for (int j = 0; j < basis_size(); ++j) {
    const double psi = basis_->evaluate(j, xi);
    for (int c = 0; c < components(); ++c) out[c] += psi * coeff(k, j, c);
  }
  return out;
}

State DGSolution::trace(int k, Side side) const {
  const Eigen::VectorXd& tr =
      (side == Side::left) ? basis_->left_trace() : basis_->right_trace();
  State out(components());
  for (int j = 0; j < basis_size(); ++j) {
    for (int c = 0; c < components(); ++c) out[c] += tr[j] * coeff(k, j, c);
  }
  return out;
}

State DGSolution::exterior_trace(int k, Side side) const {
  const Neighbor nb = mesh_->neighbor(k, side);
  if (nb.ghost) {
    return trace(k, side);
  }
  // The exterior value at my left face is the neighbor's right trace.
  return trace(nb.index, side == Side::left ? Side::right : Side::left);
}

State DGSolution::cell_mean(int k) const {
  const Eigen::VectorXd& avg = basis_->average_weights();
  State out(components());
  for (int j = 0; j < basis_size(); ++j) {
    for (int c = 0; c < components(); ++c) out[c] += avg[j] * coeff(k, j, c);
  }
  return out;
}

State DGSolution::total_integral() const {
  State out(components());
  for (int k = 0; k < num_elements(); ++k) {
    out += mesh_->element_width(k) * cell_mean(k);
  }
  return out;
}

bool DGSolution::all_finite() const {
  for (double v : coeffs_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void axpy(DGSolution& y, double a, const std::vector<double>& g) {
  if (g.size() != y.raw().size()) {
    throw SolverError("axpy: rhs array shape does not match the solution");
  }
  double* dst = y.raw().data();
  const double* src = g.data();
  for (std::size_t i = 0; i < g.size(); ++i) dst[i] += a * src[i];
}

DGSolution convex_combine(const DGSolution& a, double wa, const DGSolution& b,
                          double wb) {
  DGSolution out = a;
  const double* pb = b.raw().data();
  double* po = out.raw().data();
  for (std::size_t i = 0; i < out.raw().size(); ++i) {
    po[i] = wa * po[i] + wb * pb[i];
  }
  return out;
}

}  // namespace dg1d
