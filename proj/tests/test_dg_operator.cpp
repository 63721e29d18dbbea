#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>
#include <string>

#include "dg1d/dg_operator.hpp"
#include "dg1d/errors.hpp"
#include "support.hpp"

using namespace dg1d;

namespace {

std::shared_ptr<const Mesh1D> make_mesh(int n, BoundaryKind boundary,
                                        double x_min = 0.0,
                                        double x_max = 1.0) {
  return std::make_shared<const Mesh1D>(
      Mesh1D::uniform(x_min, x_max, n, boundary));
}

std::shared_ptr<const Basis> make_basis(BasisKind kind, int degree) {
  return std::make_shared<const Basis>(Basis::make(kind, degree));
}

}  // namespace

TEST_CASE("free-stream preservation for every law/basis/flux-mode") {
  struct Case {
    std::shared_ptr<const ConservationLaw> law;
    State constant;
  };
  const EulerLaw euler_tmp(1.4);
  const Case cases[] = {
      {advection_law(1.0), State{2.5}},
      {burgers_law(), State{-0.8}},
      {euler_law(1.4), euler_tmp.from_primitive(1.2, 0.4, 0.9)},
  };
  const NumericalFlux flux = NumericalFlux::make_rusanov();

  for (const Case& c : cases) {
    for (BasisKind kind :
         {BasisKind::modal_legendre, BasisKind::nodal_lagrange_gl,
          BasisKind::nodal_lagrange_uniform}) {
      for (int degree : {0, 2, 3}) {
        for (FluxMode mode : {FluxMode::quadrature, FluxMode::projected}) {
          auto basis = make_basis(kind, degree);
          const DGSolution sol = DGSolution::project(
              make_mesh(6, BoundaryKind::periodic), basis, c.law,
              [&](double) { return c.constant; });
          const SemidiscreteConfig cfg{mode,
                                       gauss_legendre_rule(degree + 2)};
          const auto rhs = semidiscrete_rhs(sol, cfg, flux);
          for (double v : rhs) {
            CHECK(std::abs(v) <= 1e-13);
          }
        }
      }
    }
  }
}

TEST_CASE("p=0 with upwind flux is the first-order finite-volume scheme") {
  const double speed = 1.3;
  auto law = advection_law(speed);
  auto mesh = make_mesh(8, BoundaryKind::periodic);
  auto basis = make_basis(BasisKind::modal_legendre, 0);
  DGSolution sol(mesh, basis, law);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int k = 0; k < 8; ++k) sol.coeff(k, 0, 0) = dist(rng);

  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(*basis);
  const auto rhs = semidiscrete_rhs(sol, cfg, NumericalFlux::make_upwind());
  const double dx = mesh->element_width(0);
  for (int k = 0; k < 8; ++k) {
    const double u_k = sol.coeff(k, 0, 0);
    const double u_prev = sol.coeff((k + 7) % 8, 0, 0);
    const double expected = -speed * (u_k - u_prev) / dx;
    CHECK(rhs[sol.index(k, 0, 0)] ==
          doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("linear profile: interior rhs means reproduce -du/dx") {
  auto law = advection_law(1.0);
  auto mesh = make_mesh(8, BoundaryKind::transmissive);
  auto basis = make_basis(BasisKind::modal_legendre, 1);
  const DGSolution sol = DGSolution::project(
      mesh, basis, law, [](double x) { return State{x}; });
  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(*basis);
  const auto rhs = semidiscrete_rhs(sol, cfg, NumericalFlux::make_upwind());

  const Eigen::VectorXd& avg = basis->average_weights();
  for (int k = 1; k < 7; ++k) {
    double mean = 0.0;
    for (int j = 0; j < 2; ++j) mean += avg[j] * rhs[sol.index(k, j, 0)];
    CHECK(mean == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("cell mean") {
  auto law = advection_law(1.0);
  auto mesh = make_mesh(3, BoundaryKind::periodic);

  SUBCASE("constant state") {
    auto basis = make_basis(BasisKind::modal_legendre, 2);
    const DGSolution sol = DGSolution::project(
        mesh, basis, law, [](double) { return State{7.25}; });
    CHECK(sol.cell_mean(1)[0] == doctest::Approx(7.25).epsilon(1e-14));
  }

  SUBCASE("only the constant Legendre mode survives") {
    auto basis = make_basis(BasisKind::modal_legendre, 2);
    DGSolution sol(mesh, basis, law);
    sol.coeff(0, 0, 0) = 1.5;
    sol.coeff(0, 1, 0) = -0.7;
    sol.coeff(0, 2, 0) = 0.3;
    CHECK(sol.cell_mean(0)[0] == doctest::Approx(1.5).epsilon(1e-14));
  }

  SUBCASE("nodal Gauss-Lobatto mean weights are {1/6, 2/3, 1/6}") {
    auto basis = make_basis(BasisKind::nodal_lagrange_gl, 2);
    DGSolution sol(mesh, basis, law);
    sol.coeff(2, 0, 0) = 1.0;
    sol.coeff(2, 1, 0) = 0.0;
    sol.coeff(2, 2, 0) = 1.0;
    CHECK(sol.cell_mean(2)[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("total integral") {
  auto law = advection_law(1.0);

  SUBCASE("unit field on the unit interval") {
    const DGSolution sol =
        DGSolution::project(make_mesh(5, BoundaryKind::periodic),
                            make_basis(BasisKind::modal_legendre, 2), law,
                            [](double) { return State{1.0}; });
    CHECK(sol.total_integral()[0] == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("weighted sum of element means") {
    auto mesh = make_mesh(2, BoundaryKind::periodic);
    DGSolution sol(mesh, make_basis(BasisKind::modal_legendre, 0), law);
    sol.coeff(0, 0, 0) = 2.0;
    sol.coeff(1, 0, 0) = 4.0;
    CHECK(sol.total_integral()[0] == doctest::Approx(3.0).epsilon(1e-15));
  }
}

TEST_CASE("discrete conservation and mean consistency") {
  auto law = burgers_law();
  auto mesh = make_mesh(16, BoundaryKind::periodic);
  auto basis = make_basis(BasisKind::modal_legendre, 2);
  const DGSolution sol = DGSolution::project(mesh, basis, law, [](double x) {
    return State{0.5 + 0.25 * std::sin(2.0 * M_PI * x)};
  });
  const NumericalFlux flux = NumericalFlux::make_rusanov();
  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(*basis);
  const auto rhs = semidiscrete_rhs(sol, cfg, flux);

  const Eigen::VectorXd& avg = basis->average_weights();
  double total = 0.0;
  for (int k = 0; k < 16; ++k) {
    double mean = 0.0;
    for (int j = 0; j < 3; ++j) mean += avg[j] * rhs[sol.index(k, j, 0)];
    total += mesh->element_width(k) * mean;

    // Mean consistency against independently recomputed face fluxes.
    // At the left face the element supplies the plus (right-of-face) state.
    const State left = flux(*law, sol.trace(k, Side::left),
                            sol.exterior_trace(k, Side::left), +1.0)
                           .value;
    const State right = flux(*law, sol.exterior_trace(k, Side::right),
                             sol.trace(k, Side::right), +1.0)
                            .value;
    const double expected = -(right[0] - left[0]) / mesh->element_width(k);
    CHECK(mean == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(std::abs(total) <= 1e-12);
}

TEST_CASE("projected and quadrature modes agree for linear flux") {
  auto law = advection_law(0.7);
  auto mesh = make_mesh(12, BoundaryKind::periodic);
  for (BasisKind kind :
       {BasisKind::modal_legendre, BasisKind::nodal_lagrange_gl}) {
    auto basis = make_basis(kind, 3);
    const DGSolution sol = DGSolution::project(mesh, basis, law, [](double x) {
      return State{std::sin(2.0 * M_PI * x) + 0.2 * x};
    });
    const QuadratureRule rule = gauss_legendre_rule(5);
    const auto rhs_q = semidiscrete_rhs(sol, {FluxMode::quadrature, rule},
                                        NumericalFlux::make_rusanov());
    const auto rhs_p = semidiscrete_rhs(sol, {FluxMode::projected, rule},
                                        NumericalFlux::make_rusanov());
    for (std::size_t i = 0; i < rhs_q.size(); ++i) {
      CHECK(rhs_q[i] == doctest::Approx(rhs_p[i]).epsilon(1e-11));
    }
  }
}

TEST_CASE("inadmissible trace reports element and face") {
  auto law = euler_law(1.4);
  auto mesh = make_mesh(4, BoundaryKind::periodic);
  auto basis = make_basis(BasisKind::modal_legendre, 0);
  const EulerLaw euler(1.4);
  DGSolution sol(mesh, basis, law);
  for (int k = 0; k < 4; ++k) {
    sol.set_coeff_state(k, 0, euler.from_primitive(1.0, 0.0, 1.0));
  }
  sol.set_coeff_state(2, 0, State{1.0, 0.0, 0.0});  // negative pressure

  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(*basis);
  try {
    semidiscrete_rhs(sol, cfg, NumericalFlux::make_rusanov());
    FAIL("expected AdmissibilityError");
  } catch (const AdmissibilityError& e) {
    const std::string message = e.what();
    CHECK(message.find("element 2") != std::string::npos);
    CHECK(message.find("face") != std::string::npos);
  }
}
