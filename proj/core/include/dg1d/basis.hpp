#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "dg1d/quadrature.hpp"
#include "dg1d/state.hpp"

namespace dg1d {

enum class BasisKind { modal_legendre, nodal_lagrange_gl, nodal_lagrange_uniform };

/// Reference-element functional basis on [-1, 1] with the element matrices
/// shared by every scheme. Physical elements map through
/// x = x_{k-1/2} + (dx/2)(xi + 1); the Jacobian dx/2 is applied by callers,
/// so everything here is mesh-independent.
///
/// modal_legendre uses the monic orthogonal family 1, xi, xi^2 - 1/3, ...
/// nodal kinds are Lagrange bases on Gauss-Lobatto or uniformly spaced
/// nodes. The uniform-node variant is ill-conditioned from degree ~8 on
/// (Runge); prefer Gauss-Lobatto nodes at high order.
class Basis {
 public:
  static Basis make(BasisKind kind, int degree);

  BasisKind kind() const { return kind_; }
  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  bool is_nodal() const { return kind_ != BasisKind::modal_legendre; }

  /// Interpolation nodes for nodal kinds; empty for modal.
  const std::vector<double>& nodes() const { return nodes_; }

  double evaluate(int j, double xi) const;
  double derivative(int j, double xi) const;

  /// M_ij = integral of psi_i psi_j over [-1,1].
  const Eigen::MatrixXd& mass() const { return mass_; }
  const Eigen::MatrixXd& mass_inverse() const { return mass_inverse_; }
  /// K_ij = integral of psi_i psi_j' over [-1,1].
  const Eigen::MatrixXd& stiffness() const { return stiffness_; }

  /// Evaluation vectors at xi = -1 and xi = +1.
  const Eigen::VectorXd& left_trace() const { return left_trace_; }
  const Eigen::VectorXd& right_trace() const { return right_trace_; }

  /// avg_j = (1/2) integral of psi_j; dot with coefficients gives the
  /// element mean exactly.
  const Eigen::VectorXd& average_weights() const { return average_weights_; }

  /// Coefficients of the constant function 1 in this basis.
  const Eigen::VectorXd& constant_one() const { return constant_one_; }

 private:
  Basis(BasisKind kind, int degree);

  BasisKind kind_;
  int degree_;
  std::vector<double> nodes_;           // empty for modal
  std::vector<double> monic_offsets_;   // recurrence b_k for modal
  Eigen::MatrixXd mass_, mass_inverse_, stiffness_;
  Eigen::VectorXd left_trace_, right_trace_, average_weights_, constant_one_;
};

inline Basis build_basis(BasisKind kind, int degree) {
  return Basis::make(kind, degree);
}

/// Sum of coeffs[j] * psi_j(xi). Throws on coefficient-length mismatch
/// or |xi| > 1 (up to round-off).
State evaluate_solution(const Basis& basis, std::span<const State> coeffs,
                        double xi);

/// Matrix T with c_to = T * c_from for two bases spanning the same
/// polynomial space and degree.
Eigen::MatrixXd change_of_basis(const Basis& from, const Basis& to);

/// values[d][j] = d-th derivative of the monic Legendre polynomial of
/// degree j at xi, for j < count and d <= max_order. The recurrence extends
/// beyond [-1,1], which the Cauchy-Kowalewski trace expansion relies on.
std::vector<std::vector<double>> monic_legendre_derivatives(int count,
                                                            double xi,
                                                            int max_order);

}  // namespace dg1d
