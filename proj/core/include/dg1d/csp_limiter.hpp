#pragma once

#include <vector>

#include "dg1d/dg_solution.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

struct LimiterReport {
  int cells_limited = 0;
  double min_theta = 1.0;
  std::vector<double> thetas;  // per-cell diagnostic, optional to consume
};

/// Minimal Gauss-Lobatto rule whose exactness covers degree p
/// (smallest Q with 2Q-3 >= p), maximizing the limited CFL bound.
QuadratureRule limiter_rule_for_degree(int p);

/// Blend element k toward its (interior-admissible) cell mean with the
/// largest theta that makes all Gauss-Lobatto point values
/// interior-admissible with margin eps. The mean is preserved to round-off
/// and coefficients are untouched when nothing violates. Returns theta.
/// Throws AdmissibilityError (element index, mean state) when the mean
/// itself is outside S: the scheme's CFL guarantee was violated upstream.
double limit_cell(DGSolution& sol, int k, const QuadratureRule& rule,
                  double eps);

/// limit_cell over every element. Idempotent. Laws without constraints
/// short-circuit to a no-op report.
LimiterReport limit_solution(DGSolution& sol, double eps);

}  // namespace dg1d
