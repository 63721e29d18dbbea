#include "dg1d/quadrature.hpp"

#include <cmath>
#include <string>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNewtonTol = 1e-15;
constexpr int kNewtonMaxIter = 100;

// Make node layout exactly symmetric about the origin; Newton residues can
// leave the two halves a few ulp apart.
void symmetrize(std::vector<double>& nodes, std::vector<double>& weights) {
  const int q = static_cast<int>(nodes.size());
  for (int i = 0; i < q / 2; ++i) {
    const int j = q - 1 - i;
    const double x = 0.5 * (nodes[j] - nodes[i]);
    nodes[i] = -x;
    nodes[j] = x;
    const double w = 0.5 * (weights[i] + weights[j]);
    weights[i] = w;
    weights[j] = w;
  }
  if (q % 2 == 1) nodes[q / 2] = 0.0;
}

}  // namespace

void legendre_eval(int n, double x, double* value, double* derivative) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    *value = 1.0;
    *derivative = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  *value = p1;
  if (x == 1.0 || x == -1.0) {
    // P_n'(+-1) = +-(1)^{n+1} n(n+1)/2
    const double d = 0.5 * n * (n + 1.0);
    *derivative = (x > 0.0) ? d : ((n % 2 == 0) ? -d : d);
  } else {
    *derivative = n * (x * p1 - p0) / (x * x - 1.0);
  }
}

QuadratureRule gauss_legendre_rule(int q) {
  if (q < 1) {
    throw ConfigError("gauss_legendre_rule needs Q >= 1, got " +
                      std::to_string(q));
  }
  QuadratureRule rule;
  rule.kind = QuadratureKind::gauss_legendre;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    // Standard asymptotic initial guess for the i-th root of P_q.
    double x = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double p = 0.0, dp = 0.0;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      legendre_eval(q, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= kNewtonTol) break;
    }
    legendre_eval(q, x, &p, &dp);
    rule.nodes[q - 1 - i] = x;  // ascending order
    rule.weights[q - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  symmetrize(rule.nodes, rule.weights);
  return rule;
}

QuadratureRule gauss_lobatto_rule(int q) {
  if (q < 2) {
    throw ConfigError("gauss_lobatto_rule needs Q >= 2, got " +
                      std::to_string(q));
  }
  QuadratureRule rule;
  rule.kind = QuadratureKind::gauss_lobatto;
  rule.nodes.resize(q);
  rule.weights.resize(q);

  const int n = q - 1;  // interior nodes are the roots of P_n'
  const double endpoint_weight = 2.0 / (q * (q - 1.0));
  rule.nodes.front() = -1.0;
  rule.nodes.back() = 1.0;
  rule.weights.front() = endpoint_weight;
  rule.weights.back() = endpoint_weight;

  if (q > 2) {
    // Roots of P_n' interlace the Gauss-Legendre nodes of order n;
    // midpoints of consecutive roots of P_n are robust starting points.
    const QuadratureRule inner = gauss_legendre_rule(n);
    for (int i = 0; i < q - 2; ++i) {
      double x = 0.5 * (inner.nodes[i] + inner.nodes[i + 1]);
      for (int it = 0; it < kNewtonMaxIter; ++it) {
        double p = 0.0, dp = 0.0;
        legendre_eval(n, x, &p, &dp);
        // (1-x^2) P_n'' = 2x P_n' - n(n+1) P_n
        const double d2p = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
        const double dx = dp / d2p;
        x -= dx;
        if (std::abs(dx) <= kNewtonTol) break;
      }
      double p = 0.0, dp = 0.0;
      legendre_eval(n, x, &p, &dp);
      rule.nodes[i + 1] = x;
      rule.weights[i + 1] = 2.0 / (q * (q - 1.0) * p * p);
    }
  }
  symmetrize(rule.nodes, rule.weights);
  return rule;
}

}  // namespace dg1d
