#pragma once

#include <memory>
#include <span>
#include <vector>

#include "dg1d/basis.hpp"
#include "dg1d/dg_solution.hpp"
#include "dg1d/numerical_flux.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

/// Tensor space-time basis for the local predictor: the spatial basis is
/// shared with the rest of the scheme, the time basis is nodal Lagrange on
/// Gauss-Legendre points of the reference slab [0,1] (so corrector time
/// quadrature reads predictor layers without interpolation). All matrices
/// are dimensionless; physical scalings enter through dt and dx.
class SpaceTimeBasis {
 public:
  SpaceTimeBasis(std::shared_ptr<const Basis> space, int time_degree);

  const Basis& space() const { return *space_; }
  std::shared_ptr<const Basis> space_ptr() const { return space_; }
  int time_degree() const { return time_degree_; }
  int time_size() const { return time_degree_ + 1; }
  int space_size() const { return space_->size(); }

  /// Time collocation nodes and normalized weights on [0,1] (sum to 1).
  const std::vector<double>& time_nodes() const { return time_nodes_; }
  const std::vector<double>& time_weights() const { return time_weights_; }

  double time_eval(int s, double tau) const;
  double time_derivative(int s, double tau) const;

  /// Reference time matrices: M^t_ij = int psi_i psi_j dtau,
  /// K^t_ij = int psi_i psi_j' dtau, and the endpoint outer products
  /// (1_n)_ij = psi_i(0) psi_j(0), (1_{n+1})_ij = psi_i(1) psi_j(1).
  const Eigen::MatrixXd& time_mass() const { return time_mass_; }
  const Eigen::MatrixXd& time_stiffness() const { return time_stiffness_; }
  const Eigen::MatrixXd& endpoint_start() const { return endpoint_start_; }
  const Eigen::MatrixXd& endpoint_end() const { return endpoint_end_; }
  /// r_s = psi_s(0): injection of the known datum at the slab start.
  const Eigen::VectorXd& initial_injection() const { return initial_injection_; }

  /// Space matrices (from the shared basis): M^x and K^x_ij = int psi_i psi_j'.
  const Eigen::MatrixXd& space_mass() const { return space_->mass(); }
  const Eigen::MatrixXd& space_stiffness() const { return space_->stiffness(); }

  // Factored Picard operators (see predict_element):
  //   Q = T0 W^T - (2 dt/dx) T1 F(Q) Sx^T.
  const Eigen::VectorXd& picard_initial() const { return picard_initial_; }   // T0
  const Eigen::MatrixXd& picard_time() const { return picard_time_; }         // T1
  const Eigen::MatrixXd& picard_space() const { return picard_space_; }       // Sx

  /// Spatial quadrature for corrector volume terms and nonlinear flux
  /// projection (Gauss-Legendre, degree+2 points).
  const QuadratureRule& space_rule() const { return space_rule_; }
  const Eigen::MatrixXd& space_values() const { return space_values_; }   // (r, q)
  const Eigen::MatrixXd& space_derivs() const { return space_derivs_; }   // (r, i)
  const Eigen::MatrixXd& flux_projection() const { return flux_projection_; }

 private:
  std::shared_ptr<const Basis> space_;
  int time_degree_;
  std::vector<double> time_nodes_, time_weights_;
  Eigen::MatrixXd time_mass_, time_stiffness_, endpoint_start_, endpoint_end_;
  Eigen::VectorXd initial_injection_;
  Eigen::VectorXd picard_initial_;
  Eigen::MatrixXd picard_time_, picard_space_;
  QuadratureRule space_rule_;
  Eigen::MatrixXd space_values_, space_derivs_, flux_projection_;
};

inline SpaceTimeBasis build_spacetime_basis(std::shared_ptr<const Basis> space,
                                            int time_degree) {
  return SpaceTimeBasis(std::move(space), time_degree);
}

/// Per-element space-time predictor coefficients Q^{s,q}, time-layer-major,
/// with Picard iteration diagnostics.
struct SpaceTimePredictor {
  int time_size = 0;
  int space_size = 0;
  int components = 0;
  std::vector<double> coeffs;  // [s][q][c]
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;  // one entry per Picard sweep

  double at(int s, int q, int c) const {
    return coeffs[(static_cast<std::size_t>(s) * space_size + q) * components + c];
  }
  double& at(int s, int q, int c) {
    return coeffs[(static_cast<std::size_t>(s) * space_size + q) * components + c];
  }

  /// Spatial value of time layer s at reference coordinate xi.
  State layer_value(const SpaceTimeBasis& stb, int s, double xi) const;
  /// Full space-time value at (tau, xi) in the reference slab.
  State value(const SpaceTimeBasis& stb, double tau, double xi) const;
};

struct PicardOptions {
  double tol = 1e-12;
  int max_iter = 30;
};

/// Element-local space-time predictor: solves the causal weak form
///   [(1_{n+1} - (K^t)^T) (x) M^x] Q = (r (x) M^x) W^n - (2dt/dx)[M^t (x) K^x] F(Q)
/// by Picard iteration from the constant-in-time extension of W^n. Uses no
/// neighbor data. elem_coeffs is the element's [j][c] block.
SpaceTimePredictor predict_element(const SpaceTimeBasis& stb,
                                   const ConservationLaw& law,
                                   std::span<const double> elem_coeffs,
                                   int components, double dt, double dx,
                                   const PicardOptions& opts = {});

std::vector<SpaceTimePredictor> predict_all(const DGSolution& sol,
                                            const SpaceTimeBasis& stb,
                                            double dt,
                                            const PicardOptions& opts = {});

/// Time-integrated numerical flux through every face (fixed +x frame),
/// integral over [0, dt] of F*(t) evaluated at the predictor traces by
/// Gauss quadrature at the time layers. N+1 entries.
std::vector<State> ader_face_flux_integrals(
    const DGSolution& sol, const SpaceTimeBasis& stb,
    const std::vector<SpaceTimePredictor>& predictors,
    const NumericalFlux& flux, double dt);

/// One-step update: space-time volume and face integrals of the predictor
/// fed into the weak form.
DGSolution ader_corrector_step(const DGSolution& sol, const SpaceTimeBasis& stb,
                               const std::vector<SpaceTimePredictor>& predictors,
                               const NumericalFlux& flux, double dt);

struct AderStepInfo {
  int max_iterations = 0;
  double max_residual = 0.0;
};

/// predict_all + ader_corrector_step.
DGSolution ader_predictor_step(const DGSolution& sol, const SpaceTimeBasis& stb,
                               const NumericalFlux& flux, double dt,
                               const PicardOptions& opts = {},
                               AderStepInfo* info = nullptr);

/// Cauchy-Kowalewski face flux for linear advection: the time derivatives of
/// the upwind trace polynomial follow from d_t^k W = (-a)^k d_x^k W, the
/// resulting Taylor series is finite, and the flux time integral over
/// [0, dt] is taken exactly. Coefficients are modal Legendre, [j][c] blocks.
State ck_ader_advection_flux(double a, const Basis& modal,
                             std::span<const double> left_coeffs,
                             double dx_left,
                             std::span<const double> right_coeffs,
                             double dx_right, int components, double dt);

/// Time-integrated upwind fluxes for every face of an advection solution.
std::vector<State> ck_face_flux_integrals(const DGSolution& sol, double dt);

/// One-step Cauchy-Kowalewski ADER update. Linear advection only; the local
/// in-cell evolution W(t, x) = W^n(x - a t) feeds the volume term and the
/// exact upwind time integrals feed the face term.
DGSolution ader_ck_step(const DGSolution& sol, double dt);

}  // namespace dg1d
