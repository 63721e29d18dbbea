#pragma once

#include "dg1d/conservation_law.hpp"
#include "dg1d/state.hpp"

namespace dg1d {

/// Numerical flux across a face in direction of the outward normal n
/// (+1 or -1 in 1D). Consistency: F*(W, W; n) = flux(W) * n.
struct FaceFlux {
  State value;
  double normal = 1.0;
};

/// Rusanov / local Lax-Friedrichs flux
///   F* = (F(W+) + F(W-))/2 * n - jump_factor * lambda * (W+ - W-),
/// lambda = max(alpha(W+), alpha(W-)). The conventional local
/// Lax-Friedrichs factor is 1/2 (reduces exactly to upwind for linear
/// advection); 1.0 applies the full-lambda jump penalty.
FaceFlux rusanov(const ConservationLaw& law, const State& w_plus,
                 const State& w_minus, double n, double jump_factor = 0.5);

/// Exact Riemann flux for linear advection: takes a * W_minus when
/// information travels along +n, a * W_plus otherwise (times n).
FaceFlux upwind_advection(double speed, const State& w_plus,
                          const State& w_minus, double n);

enum class FluxKind { rusanov, upwind };

/// Config-selected face flux. W_plus is the exterior trace, W_minus the
/// interior trace, matching the update convention
///   W_i' = W_i - nu [F*(W_{i+1}, W_i) - F*(W_i, W_{i-1})].
class NumericalFlux {
 public:
  static NumericalFlux make_rusanov(double jump_factor = 0.5) {
    return NumericalFlux(FluxKind::rusanov, jump_factor);
  }
  static NumericalFlux make_upwind() {
    return NumericalFlux(FluxKind::upwind, 0.5);
  }

  FaceFlux operator()(const ConservationLaw& law, const State& w_plus,
                      const State& w_minus, double n) const;

  FluxKind kind() const { return kind_; }
  double jump_factor() const { return jump_factor_; }

 private:
  NumericalFlux(FluxKind kind, double jump_factor)
      : kind_(kind), jump_factor_(jump_factor) {}

  FluxKind kind_;
  double jump_factor_;
};

}  // namespace dg1d
