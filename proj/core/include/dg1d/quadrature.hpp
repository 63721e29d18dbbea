#pragma once

#include <vector>

namespace dg1d {

enum class QuadratureKind { gauss_legendre, gauss_lobatto };

/// Quadrature rule on the reference element [-1, 1].
/// Gauss-Legendre with Q points is exact for degree 2Q-1,
/// Gauss-Lobatto (includes both endpoints) for degree 2Q-3.
struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::gauss_legendre;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  int exactness_degree() const {
    const int q = size();
    return kind == QuadratureKind::gauss_legendre ? 2 * q - 1 : 2 * q - 3;
  }

  template <class Fn>
  double integrate(Fn&& fn) const {
    double sum = 0.0;
    for (int q = 0; q < size(); ++q) sum += weights[q] * fn(nodes[q]);
    return sum;
  }
};

QuadratureRule gauss_legendre_rule(int q);
QuadratureRule gauss_lobatto_rule(int q);

/// Value and first derivative of the Legendre polynomial P_n at x.
/// Exposed for node computations and tests.
void legendre_eval(int n, double x, double* value, double* derivative);

}  // namespace dg1d
