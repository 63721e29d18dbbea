#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "dg1d/conservation_law.hpp"
#include "dg1d/errors.hpp"
#include "support.hpp"

using namespace dg1d;

namespace {

// Central finite-difference flux Jacobian, step 1e-6 (1 + |W|) per column.
Eigen::MatrixXd fd_jacobian(const ConservationLaw& law, const State& w) {
  const int m = law.components();
  Eigen::MatrixXd jac(m, m);
  for (int c = 0; c < m; ++c) {
    const double h = 1e-6 * (1.0 + std::abs(w[c]));
    State lo = w, hi = w;
    hi[c] += h;
    lo[c] -= h;
    const State f_hi = law.flux(hi);
    const State f_lo = law.flux(lo);
    for (int r = 0; r < m; ++r) {
      jac(r, c) = (f_hi[r] - f_lo[r]) / (2.0 * h);
    }
  }
  return jac;
}

double spectral_radius(const Eigen::MatrixXd& m) {
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  double radius = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
  }
  return radius;
}

}  // namespace

TEST_CASE("advection law closed forms") {
  const auto law = advection_law(1.0);
  CHECK(law->components() == 1);
  CHECK(law->flux(State{2.0})[0] == 2.0);
  CHECK(law->max_wave_speed(State{2.0}) == 1.0);

  const auto fast = advection_law(-3.0);
  CHECK(fast->flux(State{0.5})[0] == doctest::Approx(-1.5));
  CHECK(fast->max_wave_speed(State{0.5}) == 3.0);

  const auto still = advection_law(0.0);
  CHECK(still->max_wave_speed(State{17.0}) == 0.0);
  CHECK(still->admissible(State{-5.0}));
  CHECK_THROWS_AS(advection_law(std::nan("")), ConfigError);
}

TEST_CASE("burgers law closed forms") {
  const auto law = burgers_law();
  CHECK(law->flux(State{2.0})[0] == doctest::Approx(2.0));
  CHECK(law->max_wave_speed(State{2.0}) == 2.0);
  CHECK(law->flux(State{-1.0})[0] == doctest::Approx(0.5));
  CHECK(law->max_wave_speed(State{-1.0}) == 1.0);
  CHECK(law->flux(State{0.0})[0] == 0.0);
  CHECK(law->max_wave_speed(State{0.0}) == 0.0);
}

TEST_CASE("euler law closed forms") {
  const EulerLaw law(1.4);
  const State rest = law.from_primitive(1.0, 0.0, 1.0);
  CHECK(rest[2] == doctest::Approx(2.5).epsilon(1e-15));
  const State f = law.flux(rest);
  CHECK(f[0] == 0.0);
  CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f[2] == 0.0);
  CHECK(law.max_wave_speed(rest) ==
        doctest::Approx(std::sqrt(1.4)).epsilon(1e-14));

  // Eigenvalues of the Euler Jacobian are u and u +- c.
  const State moving = law.from_primitive(1.0, 1.0, 1.0);
  CHECK(law.max_wave_speed(moving) ==
        doctest::Approx(1.0 + std::sqrt(1.4)).epsilon(1e-14));

  const State cold{1.0, 0.0, 0.0};
  CHECK_FALSE(law.admissible(cold));
  CHECK_THROWS_AS(law.max_wave_speed(cold), AdmissibilityError);
  CHECK_THROWS_AS(EulerLaw(1.0), ConfigError);
}

TEST_CASE("alpha dominates the finite-difference Jacobian spectrum") {
  std::mt19937 rng(91);
  const EulerLaw euler(1.4);
  const auto burgers_ptr = burgers_law();
  const auto advection_ptr = advection_law(-1.7);
  for (int trial = 0; trial < 1000; ++trial) {
    const State w = testing::random_euler_state(rng, euler);
    CHECK(euler.max_wave_speed(w) >=
          spectral_radius(fd_jacobian(euler, w)) - 1e-6);

    const State u = testing::random_scalar_state(rng);
    CHECK(burgers_ptr->max_wave_speed(u) >=
          spectral_radius(fd_jacobian(*burgers_ptr, u)) - 1e-6);
    CHECK(advection_ptr->max_wave_speed(u) >=
          spectral_radius(fd_jacobian(*advection_ptr, u)) - 1e-6);
  }
}

TEST_CASE("euler admissible set is convex (ideal gas)") {
  std::mt19937 rng(7);
  const EulerLaw law(1.4);
  std::uniform_real_distribution<double> tdist(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const State a = testing::random_euler_state(rng, law);
    const State b = testing::random_euler_state(rng, law);
    CHECK(law.admissible(blend(a, tdist(rng), b)));
  }
}

TEST_CASE("blend_to_frontier solves the scalar positivity example") {
  const testing::PositiveScalarLaw law;
  // theta (-0.5) + (1 - theta) (1) = 0  =>  theta = 2/3.
  const double theta = blend_to_frontier(law, State{-0.5}, State{1.0}, 0.0);
  CHECK(std::abs(theta - 2.0 / 3.0) <= 1e-12);

  CHECK(blend_to_frontier(law, State{0.25}, State{1.0}, 0.0) == 1.0);
  CHECK(blend_to_frontier(law, State{1.0}, State{1.0}, 0.0) == 1.0);
  CHECK_THROWS_AS(blend_to_frontier(law, State{1.0}, State{-1.0}, 0.0),
                  AdmissibilityError);
}

TEST_CASE("blend_to_frontier returns the maximal theta") {
  std::mt19937 rng(23);
  const EulerLaw euler(1.4);
  const testing::PositiveScalarLaw scalar;
  const double eps = 1e-13;
  std::uniform_real_distribution<double> shift(-4.0, 0.5);

  for (int trial = 0; trial < 200; ++trial) {
    const State mean = euler.from_primitive(1.0, 0.2, 0.8);
    State point = testing::random_euler_state(rng, euler);
    point[0] += shift(rng);   // often drives density or pressure negative
    point[2] -= 2.0 * std::abs(shift(rng));
    if (!point.all_finite()) continue;
    const double theta = euler.blend_to_frontier(point, mean, eps);
    CHECK(euler.admissible_interior(blend(point, theta, mean), eps));
    if (theta < 1.0) {
      const double above = std::min(1.0, theta + 1e-6);
      CHECK_FALSE(euler.admissible_interior(blend(point, above, mean), eps));
    }

    const State sp{shift(rng)};
    const double st = scalar.blend_to_frontier(sp, State{1.0}, eps);
    CHECK(scalar.admissible_interior(blend(sp, st, State{1.0}), eps));
    if (st < 1.0) {
      const double above = std::min(1.0, st + 1e-6);
      CHECK_FALSE(scalar.admissible_interior(blend(sp, above, State{1.0}), eps));
    }
  }
}

TEST_CASE("euler blend handles the pressure-only violation") {
  const EulerLaw law(1.4);
  const State mean = law.from_primitive(1.0, 0.0, 1.0);
  // Positive density, negative pressure.
  const State point{1.0, 3.0, 1.0};
  CHECK(point[0] > 0.0);
  CHECK(law.pressure(point) < 0.0);
  const double theta = law.blend_to_frontier(point, mean, 1e-13);
  CHECK(theta < 1.0);
  CHECK(theta > 0.0);
  CHECK(law.admissible_interior(blend(point, theta, mean), 1e-13));
}
