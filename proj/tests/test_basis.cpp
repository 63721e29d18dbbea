#include <doctest.h>

#include <cmath>
#include <vector>

#include "dg1d/basis.hpp"
#include "dg1d/errors.hpp"

using namespace dg1d;

namespace {
const BasisKind kAllKinds[] = {BasisKind::modal_legendre,
                               BasisKind::nodal_lagrange_gl,
                               BasisKind::nodal_lagrange_uniform};
}

TEST_CASE("modal basis matches 1, xi, xi^2 - 1/3") {
  const Basis b = build_basis(BasisKind::modal_legendre, 2);
  for (double xi : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
    CHECK(b.evaluate(0, xi) == 1.0);
    CHECK(b.evaluate(1, xi) == xi);
    CHECK(b.evaluate(2, xi) ==
          doctest::Approx(xi * xi - 1.0 / 3.0).epsilon(1e-15));
  }
  CHECK(b.evaluate(2, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("modal mass matrix is diag(2, 2/3, 8/45)") {
  const Basis b = build_basis(BasisKind::modal_legendre, 2);
  CHECK(b.mass()(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(b.mass()(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(b.mass()(2, 2) == doctest::Approx(8.0 / 45.0).epsilon(1e-14));
}

TEST_CASE("modal mass matrix is diagonal up to round-off") {
  for (int p = 0; p <= 6; ++p) {
    const Basis b = build_basis(BasisKind::modal_legendre, p);
    double scale = 0.0;
    for (int i = 0; i < b.size(); ++i) scale = std::max(scale, b.mass()(i, i));
    for (int i = 0; i < b.size(); ++i) {
      for (int j = 0; j < b.size(); ++j) {
        if (i != j) CHECK(std::abs(b.mass()(i, j)) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("linear Gauss-Lobatto Lagrange basis") {
  const Basis b = build_basis(BasisKind::nodal_lagrange_gl, 1);
  for (double xi : {-1.0, 0.2, 1.0}) {
    CHECK(b.evaluate(0, xi) == doctest::Approx(0.5 * (1.0 - xi)));
    CHECK(b.evaluate(1, xi) == doctest::Approx(0.5 * (1.0 + xi)));
  }
  CHECK(b.mass()(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(b.mass()(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(b.mass()(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(b.mass()(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("nodal cardinality and partition of unity") {
  for (BasisKind kind :
       {BasisKind::nodal_lagrange_gl, BasisKind::nodal_lagrange_uniform}) {
    for (int p = 0; p <= 5; ++p) {
      const Basis b = build_basis(kind, p);
      REQUIRE(static_cast<int>(b.nodes().size()) == b.size());
      for (int i = 0; i < b.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
          const double expected = (i == j) ? 1.0 : 0.0;
          CHECK(std::abs(b.evaluate(j, b.nodes()[i]) - expected) <= 1e-13);
        }
      }
      for (double xi = -1.0; xi <= 1.0; xi += 0.125) {
        double sum = 0.0;
        for (int j = 0; j < b.size(); ++j) sum += b.evaluate(j, xi);
        CHECK(std::abs(sum - 1.0) <= 1e-13);
      }
    }
  }
}

TEST_CASE("mass matrices are symmetric positive definite") {
  for (BasisKind kind : kAllKinds) {
    for (int p = 0; p <= 5; ++p) {
      const Basis b = build_basis(kind, p);
      CHECK((b.mass() - b.mass().transpose()).norm() <= 1e-13);
      const Eigen::LLT<Eigen::MatrixXd> llt(b.mass());
      CHECK(llt.info() == Eigen::Success);
    }
  }
}

TEST_CASE("integration by parts: K + K^T equals the trace outer products") {
  for (BasisKind kind : kAllKinds) {
    for (int p = 0; p <= 5; ++p) {
      const Basis b = build_basis(kind, p);
      for (int i = 0; i < b.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
          const double lhs = b.stiffness()(i, j) + b.stiffness()(j, i);
          const double rhs = b.right_trace()[i] * b.right_trace()[j] -
                             b.left_trace()[i] * b.left_trace()[j];
          CHECK(std::abs(lhs - rhs) <= 1e-13);
        }
      }
    }
  }
}

TEST_CASE("change of basis round-trips modal -> nodal -> modal") {
  for (int p = 1; p <= 5; ++p) {
    const Basis modal = build_basis(BasisKind::modal_legendre, p);
    const Basis nodal = build_basis(BasisKind::nodal_lagrange_gl, p);
    const Eigen::MatrixXd round_trip =
        change_of_basis(nodal, modal) * change_of_basis(modal, nodal);
    CHECK((round_trip - Eigen::MatrixXd::Identity(p + 1, p + 1)).norm() <=
          1e-12);
  }
}

TEST_CASE("equal-degree bases span the same space") {
  // An invertible transform both ways means the spans coincide.
  const Basis modal = build_basis(BasisKind::modal_legendre, 4);
  const Basis uniform = build_basis(BasisKind::nodal_lagrange_uniform, 4);
  const Eigen::MatrixXd t = change_of_basis(modal, uniform);
  CHECK(std::abs(t.determinant()) > 1e-8);
}

TEST_CASE("evaluate_solution") {
  const Basis modal = build_basis(BasisKind::modal_legendre, 2);
  const std::vector<State> constant = {State{3.5}, State{0.0}, State{0.0}};
  for (double xi : {-1.0, 0.1, 0.9}) {
    CHECK(evaluate_solution(modal, constant, xi)[0] == doctest::Approx(3.5));
  }

  const std::vector<State> top_mode = {State{0.0}, State{0.0}, State{1.0}};
  CHECK(evaluate_solution(modal, top_mode, 1.0)[0] ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const Basis nodal = build_basis(BasisKind::nodal_lagrange_gl, 2);
  const std::vector<State> nodal_coeffs = {State{1.0}, State{-2.0}, State{4.0}};
  for (int i = 0; i < nodal.size(); ++i) {
    CHECK(evaluate_solution(nodal, nodal_coeffs, nodal.nodes()[i])[0] ==
          doctest::Approx(nodal_coeffs[i][0]).epsilon(1e-14));
  }

  const std::vector<State> short_coeffs = {State{1.0}};
  CHECK_THROWS_AS(evaluate_solution(modal, short_coeffs, 0.0), ConfigError);
  CHECK_THROWS_AS(evaluate_solution(modal, top_mode, 1.5), ConfigError);
}

TEST_CASE("degenerate p = 0 is the finite-volume limit") {
  for (BasisKind kind : kAllKinds) {
    const Basis b = build_basis(kind, 0);
    CHECK(b.size() == 1);
    CHECK(b.mass()(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(b.evaluate(0, -0.7) == 1.0);
    CHECK(b.derivative(0, 0.3) == 0.0);
    CHECK(b.average_weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(build_basis(BasisKind::modal_legendre, -1), ConfigError);
}

TEST_CASE("monic legendre derivative recurrence") {
  // pi_2 = xi^2 - 1/3, pi_3 = xi^3 - (3/5) xi.
  const double xi = 0.37;
  const auto d = monic_legendre_derivatives(4, xi, 3);
  CHECK(d[0][2] == doctest::Approx(xi * xi - 1.0 / 3.0).epsilon(1e-15));
  CHECK(d[1][2] == doctest::Approx(2.0 * xi).epsilon(1e-15));
  CHECK(d[2][2] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(d[3][2] == 0.0);
  CHECK(d[0][3] == doctest::Approx(xi * xi * xi - 0.6 * xi).epsilon(1e-15));
  CHECK(d[1][3] == doctest::Approx(3.0 * xi * xi - 0.6).epsilon(1e-15));
  CHECK(d[2][3] == doctest::Approx(6.0 * xi).epsilon(1e-15));
  CHECK(d[3][3] == doctest::Approx(6.0).epsilon(1e-15));
}
