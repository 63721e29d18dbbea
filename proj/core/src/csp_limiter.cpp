#include "dg1d/csp_limiter.hpp"

#include <algorithm>
#include <sstream>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

// Values of W_k at the rule's nodes, from the current coefficients.
std::vector<State> point_values(const DGSolution& sol, int k,
                                const QuadratureRule& rule) {
  std::vector<State> out(rule.size());
  for (int q = 0; q < rule.size(); ++q) {
    out[q] = sol.evaluate(k, rule.nodes[q]);
  }
  return out;
}

void apply_blend(DGSolution& sol, int k, double theta, const State& mean) {
  const Eigen::VectorXd& one = sol.basis().constant_one();
  for (int j = 0; j < sol.basis_size(); ++j) {
    for (int c = 0; c < sol.components(); ++c) {
      sol.coeff(k, j, c) =
          theta * sol.coeff(k, j, c) + (1.0 - theta) * mean[c] * one[j];
    }
  }
}

}  // namespace

QuadratureRule limiter_rule_for_degree(int p) {
  return gauss_lobatto_rule(std::max(2, (p + 4) / 2));
}

double limit_cell(DGSolution& sol, int k, const QuadratureRule& rule,
                  double eps) {
  if (rule.kind != QuadratureKind::gauss_lobatto ||
      rule.exactness_degree() < sol.basis().degree()) {
    throw ConfigError(
        "limiter needs a Gauss-Lobatto rule with 2Q-3 >= p so point values "
        "represent the cell mean exactly");
  }
  const ConservationLaw& law = sol.law();
  const State mean = sol.cell_mean(k);
  if (!law.admissible_interior(mean, eps)) {
    std::ostringstream os;
    os << "limiter: cell mean of element " << k
       << " is outside the admissible set (";
    for (int c = 0; c < mean.size(); ++c) os << (c ? ", " : "") << mean[c];
    os << "); the CFL guarantee was violated upstream";
    throw AdmissibilityError(os.str());
  }

  // theta = min over the Gauss-Lobatto values of the per-point blend.
  double theta = 1.0;
  for (const State& w : point_values(sol, k, rule)) {
    theta = std::min(theta, law.blend_to_frontier(w, mean, eps));
  }
  if (theta >= 1.0) {
    return 1.0;  // bitwise no-op keeps limiting idempotent
  }

  apply_blend(sol, k, theta, mean);

  // Round-off in the coefficient blend can land a point a few ulp outside
  // the margin; shrink theta marginally until the evaluated values comply.
  for (int attempt = 0; attempt < 4; ++attempt) {
    bool ok = true;
    for (const State& w : point_values(sol, k, rule)) {
      if (!law.admissible_interior(w, eps)) {
        ok = false;
        break;
      }
    }
    if (ok) return theta;
    const double shrink = 1.0 - 1e-13;
    apply_blend(sol, k, shrink, mean);  // composes onto the current blend
    theta *= shrink;
  }
  throw SolverError("limiter could not restore admissibility in element " +
                    std::to_string(k));
}

LimiterReport limit_solution(DGSolution& sol, double eps) {
  LimiterReport report;
  if (!sol.law().has_constraints()) {
    return report;
  }
  const QuadratureRule rule = limiter_rule_for_degree(sol.basis().degree());
  report.thetas.resize(sol.num_elements(), 1.0);
  for (int k = 0; k < sol.num_elements(); ++k) {
    const double theta = limit_cell(sol, k, rule, eps);
    report.thetas[k] = theta;
    if (theta < 1.0) {
      ++report.cells_limited;
      report.min_theta = std::min(report.min_theta, theta);
    }
  }
  return report;
}

}  // namespace dg1d
