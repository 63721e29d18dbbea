#include <doctest.h>

#include <cmath>
#include <memory>
#include <string>

#include "dg1d/csp_limiter.hpp"
#include "dg1d/errors.hpp"
#include "support.hpp"

using namespace dg1d;

namespace {

std::shared_ptr<const Mesh1D> unit_mesh(int n) {
  return std::make_shared<const Mesh1D>(
      Mesh1D::uniform(0.0, 1.0, n, BoundaryKind::periodic));
}

std::shared_ptr<const Basis> modal(int degree) {
  return std::make_shared<const Basis>(
      Basis::make(BasisKind::modal_legendre, degree));
}

// Largest theta keeping the pressure of theta*point + (1-theta)*mean at or
// above eps, found by plain bisection: the independent check for the
// limiter's Euler path.
double pressure_theta_oracle(const EulerLaw& law, const State& point,
                             const State& mean, double eps) {
  const auto ok = [&](double theta) {
    const State w = blend(point, theta, mean);
    return w[0] >= eps && law.pressure(w) >= eps;
  };
  if (ok(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("limiter rule selection: minimal Q with 2Q-3 >= p") {
  CHECK(limiter_rule_for_degree(0).size() == 2);
  CHECK(limiter_rule_for_degree(1).size() == 2);
  CHECK(limiter_rule_for_degree(2).size() == 3);
  CHECK(limiter_rule_for_degree(3).size() == 3);
  CHECK(limiter_rule_for_degree(4).size() == 4);
  for (int p = 0; p <= 6; ++p) {
    CHECK(2 * limiter_rule_for_degree(p).size() - 3 >= p);
  }
}

TEST_CASE("scalar positivity example: theta = 1/3") {
  auto law = testing::positive_scalar_law();
  DGSolution sol(unit_mesh(1), modal(1), law);
  sol.coeff(0, 0, 0) = 1.0;  // mean 1
  sol.coeff(0, 1, 0) = 3.0;  // endpoint values -2 and 4

  const double theta = limit_cell(sol, 0, limiter_rule_for_degree(1), 0.0);
  CHECK(std::abs(theta - 1.0 / 3.0) <= 1e-12);
  CHECK(sol.evaluate(0, -1.0)[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sol.evaluate(0, 1.0)[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sol.cell_mean(0)[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("admissible cells are untouched") {
  auto law = testing::positive_scalar_law();
  DGSolution sol(unit_mesh(1), modal(2), law);
  sol.coeff(0, 0, 0) = 2.0;
  sol.coeff(0, 1, 0) = 0.5;
  sol.coeff(0, 2, 0) = -0.25;
  const DGSolution before = sol;
  const double theta = limit_cell(sol, 0, limiter_rule_for_degree(2), 1e-13);
  CHECK(theta == 1.0);
  CHECK(sol.raw() == before.raw());  // bitwise no-op
}

TEST_CASE("euler near-vacuum cell against the bisection oracle") {
  const EulerLaw euler(1.4);
  auto law = euler_law(1.4);
  DGSolution sol(unit_mesh(1), modal(2), law);
  // Mean (1, 0, 1), pressure 0.4; strong energy slope drives the left
  // endpoint to negative pressure.
  sol.set_coeff_state(0, 0, State{1.0, 0.0, 1.0});
  sol.set_coeff_state(0, 1, State{0.0, 0.3, 1.2});
  sol.set_coeff_state(0, 2, State{0.05, 0.0, 0.1});
  const State mean = sol.cell_mean(0);
  REQUIRE(euler.admissible(mean));
  REQUIRE_FALSE(euler.admissible(sol.evaluate(0, -1.0)));

  const double eps = 1e-13;
  const QuadratureRule rule = limiter_rule_for_degree(2);
  double expected = 1.0;
  for (double node : rule.nodes) {
    expected = std::min(
        expected, pressure_theta_oracle(euler, sol.evaluate(0, node), mean, eps));
  }

  const double theta = limit_cell(sol, 0, rule, eps);
  CHECK(theta < 1.0);
  CHECK(theta == doctest::Approx(expected).epsilon(1e-9));
  for (double node : rule.nodes) {
    const State w = sol.evaluate(0, node);
    CHECK(w[0] >= eps);
    CHECK(euler.pressure(w) >= eps * (1.0 - 1e-12));
  }
  CHECK(sol.cell_mean(0)[0] == doctest::Approx(mean[0]).epsilon(1e-14));
  CHECK(sol.cell_mean(0)[2] == doctest::Approx(mean[2]).epsilon(1e-14));
}

TEST_CASE("theta is maximal: theta + 1e-6 still violates") {
  auto law = testing::positive_scalar_law();
  DGSolution sol(unit_mesh(1), modal(1), law);
  sol.coeff(0, 0, 0) = 1.0;
  sol.coeff(0, 1, 0) = 3.0;
  const DGSolution original = sol;
  const QuadratureRule rule = limiter_rule_for_degree(1);
  const double theta = limit_cell(sol, 0, rule, 0.0);
  REQUIRE(theta < 1.0);

  const double above = std::min(1.0, theta + 1e-6);
  const State mean = original.cell_mean(0);
  bool violated = false;
  for (double node : rule.nodes) {
    const State w = blend(original.evaluate(0, node), above, mean);
    if (!law->admissible_interior(w, 0.0)) violated = true;
  }
  CHECK(violated);
}

TEST_CASE("limit_solution is idempotent and conserves the total integral") {
  auto law = euler_law(1.4);
  const EulerLaw euler(1.4);
  auto mesh = unit_mesh(6);
  DGSolution sol(mesh, modal(2), law);
  for (int k = 0; k < 6; ++k) {
    sol.set_coeff_state(k, 0, euler.from_primitive(1.0 + 0.1 * k, 0.1, 0.8));
    // Energy slopes grow with k: the first cells stay admissible, the last
    // ones need limiting.
    sol.set_coeff_state(k, 1, State{0.0, 0.2, 1.2 + 0.4 * k});
    sol.set_coeff_state(k, 2, State{0.02, 0.0, 0.08});
  }
  const State integral_before = sol.total_integral();

  const LimiterReport first = limit_solution(sol, 1e-13);
  CHECK(first.cells_limited > 0);
  CHECK(first.min_theta < 1.0);
  CHECK(first.min_theta >= 0.0);

  const State integral_after = sol.total_integral();
  for (int c = 0; c < 3; ++c) {
    CHECK(integral_after[c] ==
          doctest::Approx(integral_before[c]).epsilon(1e-14));
  }

  const std::vector<double> once = sol.raw();
  const LimiterReport second = limit_solution(sol, 1e-13);
  CHECK(second.cells_limited == 0);
  CHECK(second.min_theta == 1.0);
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(sol.raw()[i] == doctest::Approx(once[i]).epsilon(1e-14));
  }
}

TEST_CASE("report bookkeeping: cells_limited = 0 iff min_theta = 1") {
  auto law = testing::positive_scalar_law();
  DGSolution sol(unit_mesh(4), modal(1), law);
  for (int k = 0; k < 4; ++k) {
    sol.coeff(k, 0, 0) = 1.0;
    sol.coeff(k, 1, 0) = (k == 2) ? 3.0 : 0.2;
  }
  const LimiterReport report = limit_solution(sol, 0.0);
  CHECK(report.cells_limited == 1);
  CHECK(report.min_theta < 1.0);
  CHECK(report.thetas[2] < 1.0);
  CHECK(report.thetas[0] == 1.0);

  DGSolution clean(unit_mesh(4), modal(1), law);
  for (int k = 0; k < 4; ++k) clean.coeff(k, 0, 0) = 1.0;
  const LimiterReport none = limit_solution(clean, 0.0);
  CHECK(none.cells_limited == 0);
  CHECK(none.min_theta == 1.0);
}

TEST_CASE("smooth admissible data never activates the limiter") {
  auto law = testing::positive_scalar_law();
  const DGSolution sol = DGSolution::project(
      unit_mesh(32), modal(2), law, [](double x) {
        return State{1.5 + std::sin(2.0 * M_PI * x)};
      });
  DGSolution work = sol;
  const LimiterReport report = limit_solution(work, 1e-13);
  CHECK(report.cells_limited == 0);
  CHECK(work.raw() == sol.raw());
}

TEST_CASE("inadmissible mean raises with the element index") {
  auto law = euler_law(1.4);
  DGSolution sol(unit_mesh(3), modal(1), law);
  const EulerLaw euler(1.4);
  for (int k = 0; k < 3; ++k) {
    sol.set_coeff_state(k, 0, euler.from_primitive(1.0, 0.0, 1.0));
  }
  sol.set_coeff_state(1, 0, State{-1.0, 0.0, 1.0});
  try {
    limit_solution(sol, 1e-13);
    FAIL("expected AdmissibilityError");
  } catch (const AdmissibilityError& e) {
    CHECK(std::string(e.what()).find("element 1") != std::string::npos);
  }
}

TEST_CASE("scalar laws without constraints short-circuit") {
  auto law = burgers_law();
  DGSolution sol(unit_mesh(4), modal(2), law);
  for (int k = 0; k < 4; ++k) sol.coeff(k, 1, 0) = -5.0;
  const LimiterReport report = limit_solution(sol, 1e-13);
  CHECK(report.cells_limited == 0);
}
