#include "dg1d/numerical_flux.hpp"

#include <algorithm>
#include <cmath>

#include "dg1d/errors.hpp"

namespace dg1d {

FaceFlux rusanov(const ConservationLaw& law, const State& w_plus,
                 const State& w_minus, double n, double jump_factor) {
  if (!law.admissible(w_plus) || !law.admissible(w_minus)) {
    throw AdmissibilityError("rusanov flux fed an inadmissible trace");
  }
  const double lambda =
      std::max(law.max_wave_speed(w_plus), law.max_wave_speed(w_minus));
  const State fp = law.flux(w_plus);
  const State fm = law.flux(w_minus);
  FaceFlux out{State(w_plus.size()), n};
  for (int c = 0; c < w_plus.size(); ++c) {
    out.value[c] = 0.5 * (fp[c] + fm[c]) * n -
                   jump_factor * lambda * (w_plus[c] - w_minus[c]);
  }
  return out;
}

FaceFlux upwind_advection(double speed, const State& w_plus,
                          const State& w_minus, double n) {
  FaceFlux out{State(1), n};
  const double upwind_value = (speed * n > 0.0) ? w_minus[0] : w_plus[0];
  out.value[0] = speed * upwind_value * n;
  return out;
}

FaceFlux NumericalFlux::operator()(const ConservationLaw& law,
                                   const State& w_plus, const State& w_minus,
                                   double n) const {
  if (kind_ == FluxKind::rusanov) {
    return rusanov(law, w_plus, w_minus, n, jump_factor_);
  }
  const auto speed = law.constant_wave_speed();
  if (!speed) {
    throw ConfigError("upwind flux requires the linear advection law");
  }
  return upwind_advection(*speed, w_plus, w_minus, n);
}

}  // namespace dg1d
