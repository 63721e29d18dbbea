#pragma once

#include <vector>

#include "dg1d/dg_solution.hpp"
#include "dg1d/numerical_flux.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

/// How the volume term evaluates the flux of the polynomial solution:
/// `projected` expands F(W_h) on the basis and contracts with the stiffness
/// matrix; `quadrature` integrates F(W_h(xi)) pointwise, which avoids
/// aliasing for nonlinear laws.
enum class FluxMode { projected, quadrature };

struct SemidiscreteConfig {
  FluxMode flux_mode = FluxMode::quadrature;
  QuadratureRule volume_rule;

  /// Default: quadrature mode with Gauss-Legendre degree+2 points.
  static SemidiscreteConfig defaults(const Basis& basis) {
    return {FluxMode::quadrature, gauss_legendre_rule(basis.degree() + 2)};
  }
};

/// Semi-discrete DG right-hand side d_t W_k^j: per element,
/// M^{-1} [ volume - surface ] with the physical Jacobian dx_k/2 applied.
/// Interior face fluxes are computed once per face so that they telescope
/// exactly in the element means. Returns an array shaped like the solution
/// coefficients. Throws AdmissibilityError (with element and face context)
/// if a face trace leaves the admissible set.
///
/// Assembly is element-local (each element reads its own coefficients plus
/// the two neighbor traces and writes only its own block), so a parallel
/// map over elements would be valid.
std::vector<double> semidiscrete_rhs(const DGSolution& sol,
                                     const SemidiscreteConfig& cfg,
                                     const NumericalFlux& flux);

}  // namespace dg1d
