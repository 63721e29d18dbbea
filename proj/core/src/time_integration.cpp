#include "dg1d/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dg1d/quadrature.hpp"

namespace dg1d {

namespace {
constexpr double kConsistencyTol = 1e-12;
}

ButcherTableau ButcherTableau::make(std::vector<std::vector<double>> a,
                                    std::vector<double> b,
                                    std::vector<double> c, std::string label) {
  ButcherTableau tab;
  tab.stages = static_cast<int>(b.size());
  tab.a = std::move(a);
  tab.b = std::move(b);
  tab.c = std::move(c);
  tab.label = std::move(label);

  if (static_cast<int>(tab.a.size()) != tab.stages ||
      static_cast<int>(tab.c.size()) != tab.stages) {
    throw ConfigError("butcher tableau '" + tab.label + "': ragged arrays");
  }
  double bsum = 0.0;
  for (int i = 0; i < tab.stages; ++i) {
    if (static_cast<int>(tab.a[i].size()) != tab.stages) {
      throw ConfigError("butcher tableau '" + tab.label + "': ragged a row");
    }
    for (int j = i; j < tab.stages; ++j) {
      if (tab.a[i][j] != 0.0) {
        throw ConfigError("butcher tableau '" + tab.label +
                          "' is not strictly lower-triangular (explicit only)");
      }
    }
    double row = 0.0;
    for (int j = 0; j < i; ++j) row += tab.a[i][j];
    if (std::abs(row - tab.c[i]) > kConsistencyTol) {
      throw ConfigError("butcher tableau '" + tab.label +
                        "' violates consistency c_i = sum_j a_ij at stage " +
                        std::to_string(i + 1));
    }
    bsum += tab.b[i];
  }
  if (std::abs(bsum - 1.0) > kConsistencyTol) {
    throw ConfigError("butcher tableau '" + tab.label +
                      "': weights b must sum to 1");
  }
  return tab;
}

ButcherTableau ButcherTableau::explicit_euler() {
  return make({{0.0}}, {1.0}, {0.0}, "explicit euler");
}

ButcherTableau ButcherTableau::heun() {
  return make({{0.0, 0.0}, {1.0, 0.0}}, {0.5, 0.5}, {0.0, 1.0}, "heun");
}

ButcherTableau ButcherTableau::ssp3() {
  return make({{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.25, 0.25, 0.0}},
              {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0}, {0.0, 1.0, 0.5},
              "ssp3 (butcher form)");
}

ButcherTableau ButcherTableau::classical_rk4() {
  return make({{0.0, 0.0, 0.0, 0.0},
               {0.5, 0.0, 0.0, 0.0},
               {0.0, 0.5, 0.0, 0.0},
               {0.0, 0.0, 1.0, 0.0}},
              {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0},
              {0.0, 0.5, 0.5, 1.0}, "classical rk4");
}

SSPScheme SSPScheme::forward_euler() {
  return {{{0.0, 0.0}}, 1.0, "forward euler"};
}

SSPScheme SSPScheme::ssp2() {
  // Heun: y1 = EE(y), y_{n+1} = 1/2 y + 1/2 EE(y1).
  return {{{0.0, 0.0}, {0.5, 1.0}}, 1.0, "ssp2 (heun)"};
}

SSPScheme SSPScheme::ssp3() {
  // Shu-Osher: u1 = EE(y); u2 = 3/4 y + 1/4 EE(u1); y' = 1/3 y + 2/3 EE(u2).
  return {{{0.0, 0.0}, {0.75, 1.0}, {1.0 / 3.0, 0.5}}, 1.0, "ssp3"};
}

double compute_dt(const DGSolution& sol, const TimeStepControl& control) {
  if (!(control.cfl > 0.0) || control.cfl > 1.0) {
    throw ConfigError("cfl must lie in (0, 1]");
  }
  const int p = sol.basis().degree();
  // Minimal Gauss-Lobatto rule with 2Q-3 >= p; its smallest (endpoint)
  // weight sets the limited CFL bound.
  const int q = std::max(2, (p + 4) / 2);
  const QuadratureRule rule = gauss_lobatto_rule(q);
  const double c_geom =
      control.limiter_active ? 0.5 * rule.weights.front() : 1.0 / (2.0 * p + 1.0);

  double min_ratio = std::numeric_limits<double>::infinity();
  double max_alpha = 0.0;
  for (int k = 0; k < sol.num_elements(); ++k) {
    double alpha_k = 0.0;
    for (double xi : rule.nodes) {
      alpha_k = std::max(alpha_k, sol.law().max_wave_speed(sol.evaluate(k, xi)));
    }
    max_alpha = std::max(max_alpha, alpha_k);
    if (alpha_k > 0.0) {
      min_ratio = std::min(min_ratio, sol.mesh().element_width(k) / alpha_k);
    }
  }
  if (max_alpha == 0.0) {
    return control.dt_max;  // no waves anywhere
  }
  return std::min(control.cfl * c_geom * min_ratio, control.dt_max);
}

}  // namespace dg1d
