#pragma once

// Shared helpers for the unit and acceptance suites: a scalar law with a
// genuine convex constraint (S = {u > 0}), random admissible-state
// generators, and small numerical oracles.

#include <memory>
#include <random>
#include <string>

#include "dg1d/conservation_law.hpp"
#include "dg1d/state.hpp"

namespace dg1d::testing {

/// Linear advection restricted to positive states. Exercises the blend and
/// limiter machinery with a constraint simple enough to solve by hand.
class PositiveScalarLaw final : public ConservationLaw {
 public:
  explicit PositiveScalarLaw(double speed = 1.0) : speed_(speed) {}
  int components() const override { return 1; }
  const std::string& name() const override { return name_; }
  State flux(const State& w) const override { return {speed_ * w[0]}; }
  double max_wave_speed(const State&) const override {
    return std::abs(speed_);
  }
  bool admissible(const State& w) const override {
    return w.all_finite() && w[0] > 0.0;
  }
  bool admissible_interior(const State& w, double eps) const override {
    return w.all_finite() && w[0] >= eps;
  }
  std::optional<double> constant_wave_speed() const override { return speed_; }

 private:
  double speed_;
  std::string name_ = "advection (positive states)";
};

inline std::shared_ptr<const ConservationLaw> positive_scalar_law(
    double speed = 1.0) {
  return std::make_shared<PositiveScalarLaw>(speed);
}

/// Random admissible Euler state with moderate primitive ranges.
inline State random_euler_state(std::mt19937& rng, const EulerLaw& law) {
  std::uniform_real_distribution<double> rho(0.1, 3.0);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> p(0.05, 3.0);
  return law.from_primitive(rho(rng), u(rng), p(rng));
}

inline State random_scalar_state(std::mt19937& rng, double lo = -3.0,
                                 double hi = 3.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return State{u(rng)};
}

}  // namespace dg1d::testing
