#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "dg1d/basis.hpp"
#include "dg1d/conservation_law.hpp"
#include "dg1d/mesh.hpp"
#include "dg1d/state.hpp"

namespace dg1d {

/// Piecewise-polynomial DG solution: the coefficient array W_k^j over the
/// mesh plus the current time. Coefficients are stored flat, element-major
/// then basis index then component.
class DGSolution {
 public:
  DGSolution(std::shared_ptr<const Mesh1D> mesh,
             std::shared_ptr<const Basis> basis,
             std::shared_ptr<const ConservationLaw> law, double time = 0.0);

  /// L2 projection of an initial condition, by Gauss-Legendre quadrature
  /// with degree+3 points per element.
  static DGSolution project(std::shared_ptr<const Mesh1D> mesh,
                            std::shared_ptr<const Basis> basis,
                            std::shared_ptr<const ConservationLaw> law,
                            const std::function<State(double)>& fields);

  const Mesh1D& mesh() const { return *mesh_; }
  const Basis& basis() const { return *basis_; }
  const ConservationLaw& law() const { return *law_; }
  std::shared_ptr<const Mesh1D> mesh_ptr() const { return mesh_; }
  std::shared_ptr<const Basis> basis_ptr() const { return basis_; }
  std::shared_ptr<const ConservationLaw> law_ptr() const { return law_; }

  int num_elements() const { return mesh_->num_elements(); }
  int basis_size() const { return basis_->size(); }
  int components() const { return law_->components(); }

  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  double coeff(int k, int j, int c) const { return coeffs_[index(k, j, c)]; }
  double& coeff(int k, int j, int c) { return coeffs_[index(k, j, c)]; }

  State coeff_state(int k, int j) const;
  void set_coeff_state(int k, int j, const State& w);

  /// Value of the solution at reference coordinate xi within element k.
  State evaluate(int k, double xi) const;

  /// One-sided values at the element's own faces.
  State trace(int k, Side side) const;

  /// Exterior trace seen from element k across the given face, honoring
  /// the mesh boundary kind.
  State exterior_trace(int k, Side side) const;

  /// Exact element mean (1/2) integral of W_k over the reference element.
  State cell_mean(int k) const;

  /// Conservation diagnostic: sum_k dx_k * cell_mean(k).
  State total_integral() const;

  bool all_finite() const;

  const std::vector<double>& raw() const { return coeffs_; }
  std::vector<double>& raw() { return coeffs_; }

  std::size_t index(int k, int j, int c) const {
    return (static_cast<std::size_t>(k) * basis_size() + j) * components() + c;
  }

 private:
  std::shared_ptr<const Mesh1D> mesh_;
  std::shared_ptr<const Basis> basis_;
  std::shared_ptr<const ConservationLaw> law_;
  std::vector<double> coeffs_;
  double time_ = 0.0;
};

/// y.coeffs += a * g, the vector-space hook used by the time integrators.
void axpy(DGSolution& y, double a, const std::vector<double>& g);

/// wa * a + wb * b on coefficients; metadata (mesh/basis/law/time) from a.
DGSolution convex_combine(const DGSolution& a, double wa, const DGSolution& b,
                          double wb);

}  // namespace dg1d
