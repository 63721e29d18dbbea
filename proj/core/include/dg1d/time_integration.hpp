#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dg1d/dg_solution.hpp"
#include "dg1d/errors.hpp"

namespace dg1d {

/// Explicit Runge-Kutta coefficients. Validated on construction:
/// strictly lower-triangular a, c_i = sum_j a_ij, sum_i b_i = 1.
struct ButcherTableau {
  int stages = 0;
  std::vector<std::vector<double>> a;  // stages x stages, strictly lower
  std::vector<double> b;
  std::vector<double> c;
  std::string label;

  static ButcherTableau make(std::vector<std::vector<double>> a,
                             std::vector<double> b, std::vector<double> c,
                             std::string label);

  static ButcherTableau explicit_euler();
  static ButcherTableau heun();
  static ButcherTableau ssp3();
  static ButcherTableau classical_rk4();
};

/// Strong-stability-preserving scheme in Shu-Osher form: every stage is a
/// convex combination of the step input y_n and an explicit-Euler update of
/// the previous stage,
///   y^{(i)} = eta_i y_n + (1 - eta_i) [ y^{(i-1)} + dt f(y^{(i-1)}) ].
struct SSPScheme {
  struct Stage {
    double initial_weight;  // eta_i, weight on y_n
    double c;               // abscissa of the stage input
  };
  std::vector<Stage> stages;
  double cfl_max = 1.0;  // max_i a_i/b_i; 1.0 for the optimal schemes here
  std::string label;

  static SSPScheme forward_euler();
  static SSPScheme ssp2();  // Heun
  static SSPScheme ssp3();
};

// Vector-space hooks for scalar ODE states (DGSolution has its own
// overloads in dg_solution.hpp).
inline void axpy(double& y, double a, double g) { y += a * g; }
inline double convex_combine(double a, double wa, double b, double wb) {
  return wa * a + wb * b;
}
inline void axpy(std::vector<double>& y, double a,
                 const std::vector<double>& g) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * g[i];
}
inline std::vector<double> convex_combine(const std::vector<double>& a,
                                          double wa,
                                          const std::vector<double>& b,
                                          double wb) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = wa * a[i] + wb * b[i];
  return out;
}

struct NoPostStageHook {
  template <class Y>
  void operator()(Y&) const {}
};

/// One explicit Runge-Kutta step y -> y + dt sum_i b_i k_i. The rhs callable
/// has signature g = f(y, t); failures propagate with the stage attached.
template <class Y, class Rhs>
Y rk_step(Rhs&& f, const Y& y0, double t, double dt,
          const ButcherTableau& tab) {
  using G = std::decay_t<decltype(f(y0, t))>;
  std::vector<G> k;
  k.reserve(tab.stages);
  for (int i = 0; i < tab.stages; ++i) {
    Y yi = y0;
    for (int j = 0; j < i; ++j) {
      if (tab.a[i][j] != 0.0) axpy(yi, dt * tab.a[i][j], k[j]);
    }
    try {
      k.push_back(f(yi, t + tab.c[i] * dt));
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " [RK stage " +
                        std::to_string(i + 1) + "]");
    }
  }
  Y out = y0;
  for (int i = 0; i < tab.stages; ++i) {
    axpy(out, dt * tab.b[i], k[i]);
  }
  return out;
}

/// One SSP step in Shu-Osher form. The hook runs after every Euler substage
/// (the limiter slot): each stage input is then admissible at the
/// Gauss-Lobatto points, which is what the convex-combination argument
/// needs.
template <class Y, class Rhs, class Hook = NoPostStageHook>
Y ssp_step(Rhs&& f, const Y& y0, double t, double dt, const SSPScheme& scheme,
           Hook&& hook = {}) {
  Y current = y0;
  for (std::size_t i = 0; i < scheme.stages.size(); ++i) {
    const auto& stage = scheme.stages[i];
    try {
      auto g = f(current, t + stage.c * dt);
      Y euler = current;
      axpy(euler, dt, g);
      Y next = (stage.initial_weight == 0.0)
                   ? std::move(euler)
                   : convex_combine(y0, stage.initial_weight, euler,
                                    1.0 - stage.initial_weight);
      hook(next);
      current = std::move(next);
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " [SSP stage " +
                        std::to_string(i + 1) + "]");
    }
  }
  return current;
}

struct TimeStepControl {
  double cfl = 0.9;            // user fraction in (0, 1]
  bool limiter_active = false;
  double dt_max = 1e30;
};

/// CFL time step: dt = cfl * c_geom * min_k dx_k / alpha_k, where alpha_k
/// is the wave-speed bound over the element's Gauss-Lobatto point values
/// and c_geom is the normalized smallest Gauss-Lobatto weight when the
/// limiter is active, 1/(2p+1) otherwise. Falls back to dt_max when no
/// waves are present.
double compute_dt(const DGSolution& sol, const TimeStepControl& control);

}  // namespace dg1d
