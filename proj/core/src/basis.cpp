#include "dg1d/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

// Monic Legendre three-term recurrence: pi_{k+1} = xi pi_k - b_k pi_{k-1}
// with b_k = k^2 / (4k^2 - 1). Gives 1, xi, xi^2 - 1/3, xi^3 - (3/5) xi, ...
double monic_b(int k) {
  return static_cast<double>(k) * k / (4.0 * k * k - 1.0);
}

double monic_value(int j, double xi) {
  double p0 = 1.0, p1 = xi;
  if (j == 0) return 1.0;
  for (int k = 1; k < j; ++k) {
    const double p2 = xi * p1 - monic_b(k) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double monic_derivative(int j, double xi) {
  if (j == 0) return 0.0;
  double p0 = 1.0, p1 = xi;
  double d0 = 0.0, d1 = 1.0;
  for (int k = 1; k < j; ++k) {
    const double b = monic_b(k);
    const double p2 = xi * p1 - b * p0;
    const double d2 = p1 + xi * d1 - b * d0;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

double lagrange_value(const std::vector<double>& nodes, int j, double xi) {
  double v = 1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (static_cast<int>(i) == j) continue;
    v *= (xi - nodes[i]) / (nodes[j] - nodes[i]);
  }
  return v;
}

double lagrange_derivative(const std::vector<double>& nodes, int j, double xi) {
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (static_cast<int>(k) == j) continue;
    double term = 1.0 / (nodes[j] - nodes[k]);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (static_cast<int>(i) == j || i == k) continue;
      term *= (xi - nodes[i]) / (nodes[j] - nodes[i]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Basis Basis::make(BasisKind kind, int degree) {
  if (degree < 0) {
    throw ConfigError("basis degree must be nonnegative, got " +
                      std::to_string(degree));
  }
  return Basis(kind, degree);
}

Basis::Basis(BasisKind kind, int degree) : kind_(kind), degree_(degree) {
  const int p = size();
  switch (kind_) {
    case BasisKind::modal_legendre:
      break;
    case BasisKind::nodal_lagrange_gl:
      // Degenerate p=0 keeps the finite-volume limit available.
      nodes_ = (degree_ == 0) ? std::vector<double>{0.0}
                              : gauss_lobatto_rule(p).nodes;
      break;
    case BasisKind::nodal_lagrange_uniform:
      if (degree_ == 0) {
        nodes_ = {0.0};
      } else {
        nodes_.resize(p);
        for (int j = 0; j <= degree_; ++j) {
          nodes_[j] = -1.0 + 2.0 * j / degree_;
        }
      }
      break;
    default:
      throw ConfigError("unsupported basis kind");
  }

  // Element matrices by quadrature exact for the integrands' degrees
  // (mass is degree 2p, handled exactly by p+1 Gauss-Legendre points).
  const QuadratureRule rule = gauss_legendre_rule(p);
  mass_ = Eigen::MatrixXd::Zero(p, p);
  stiffness_ = Eigen::MatrixXd::Zero(p, p);
  average_weights_ = Eigen::VectorXd::Zero(p);
  for (int q = 0; q < rule.size(); ++q) {
    const double xi = rule.nodes[q];
    const double w = rule.weights[q];
    Eigen::VectorXd vals(p), ders(p);
    for (int j = 0; j < p; ++j) {
      vals[j] = evaluate(j, xi);
      ders[j] = derivative(j, xi);
    }
    mass_ += w * vals * vals.transpose();
    stiffness_ += w * vals * ders.transpose();
    average_weights_ += 0.5 * w * vals;
  }
  mass_inverse_ = mass_.inverse();

  left_trace_.resize(p);
  right_trace_.resize(p);
  for (int j = 0; j < p; ++j) {
    left_trace_[j] = evaluate(j, -1.0);
    right_trace_[j] = evaluate(j, 1.0);
  }

  constant_one_ = Eigen::VectorXd::Zero(p);
  if (is_nodal()) {
    constant_one_.setOnes();
  } else {
    constant_one_[0] = 1.0;
  }
}

double Basis::evaluate(int j, double xi) const {
  return is_nodal() ? lagrange_value(nodes_, j, xi) : monic_value(j, xi);
}

double Basis::derivative(int j, double xi) const {
  return is_nodal() ? lagrange_derivative(nodes_, j, xi)
                    : monic_derivative(j, xi);
}

State evaluate_solution(const Basis& basis, std::span<const State> coeffs,
                        double xi) {
  if (static_cast<int>(coeffs.size()) != basis.size()) {
    throw ConfigError("coefficient count " + std::to_string(coeffs.size()) +
                      " does not match basis size " +
                      std::to_string(basis.size()));
  }
  if (std::abs(xi) > 1.0 + 1e-12) {
    throw ConfigError("evaluation point outside the reference element");
  }
  State out(coeffs[0].size());
  for (int j = 0; j < basis.size(); ++j) {
    out += basis.evaluate(j, xi) * coeffs[j];
  }
  return out;
}

Eigen::MatrixXd change_of_basis(const Basis& from, const Basis& to) {
  if (from.degree() != to.degree()) {
    throw ConfigError("change_of_basis requires equal degrees");
  }
  const int p = from.size();
  const QuadratureRule samples = gauss_legendre_rule(p);
  Eigen::MatrixXd a_from(p, p), a_to(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      a_from(i, j) = from.evaluate(j, samples.nodes[i]);
      a_to(i, j) = to.evaluate(j, samples.nodes[i]);
    }
  }
  return a_to.partialPivLu().solve(a_from);
}

std::vector<std::vector<double>> monic_legendre_derivatives(int count,
                                                            double xi,
                                                            int max_order) {
  std::vector<std::vector<double>> out(
      max_order + 1, std::vector<double>(count, 0.0));
  if (count == 0) return out;
  // d-th derivative recurrence:
  // pi_{k+1}^{(d)} = xi pi_k^{(d)} + d pi_k^{(d-1)} - b_k pi_{k-1}^{(d)}
  out[0][0] = 1.0;
  if (count > 1) {
    out[0][1] = xi;
    if (max_order >= 1) out[1][1] = 1.0;
  }
  for (int k = 1; k + 1 < count; ++k) {
    const double b = monic_b(k);
    for (int d = 0; d <= max_order; ++d) {
      const double lower = (d > 0) ? d * out[d - 1][k] : 0.0;
      out[d][k + 1] = xi * out[d][k] + lower - b * out[d][k - 1];
    }
  }
  return out;
}

}  // namespace dg1d
