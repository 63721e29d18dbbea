#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dg1d/state.hpp"

namespace dg1d {

/// A hyperbolic conservation law: flux F(W), a bound alpha(W) on the
/// spectral radius of the flux Jacobian, and the convex admissible set S.
/// Law objects are immutable and all operations are pure.
class ConservationLaw {
 public:
  virtual ~ConservationLaw() = default;

  virtual int components() const = 0;
  virtual const std::string& name() const = 0;

  virtual State flux(const State& w) const = 0;

  /// Upper bound on |eigenvalues| of dF/dW at w. Throws AdmissibilityError
  /// for laws whose wave speeds are undefined outside S (signals a limiter
  /// failure upstream).
  virtual double max_wave_speed(const State& w) const = 0;

  virtual bool admissible(const State& w) const = 0;

  /// Strict membership with margin eps (constraint quantities >= eps).
  virtual bool admissible_interior(const State& w, double eps) const = 0;

  /// False when S is the whole space, letting limiting short-circuit.
  virtual bool has_constraints() const { return true; }

  /// Largest theta in [0,1] such that theta*point + (1-theta)*mean is
  /// interior-admissible with margin eps; 1 when the point already is.
  /// Requires an interior-admissible mean. Default: bisection on the
  /// membership predicate (the admissible set is convex, so the feasible
  /// set of theta is an interval containing 0).
  virtual double blend_to_frontier(const State& point, const State& mean,
                                   double eps) const;

  /// Constant transport speed for linear advection; nullopt otherwise.
  virtual std::optional<double> constant_wave_speed() const {
    return std::nullopt;
  }

 protected:
  /// Shared bisection kernel: assumes blend(lo) admissible, blend(hi) not.
  double bisect_blend(const State& point, const State& mean, double eps,
                      double lo, double hi) const;
};

/// Linear advection u_t + (a u)_x = 0 with S = R.
class AdvectionLaw final : public ConservationLaw {
 public:
  explicit AdvectionLaw(double speed);
  int components() const override { return 1; }
  const std::string& name() const override { return name_; }
  State flux(const State& w) const override;
  double max_wave_speed(const State& w) const override;
  bool admissible(const State& w) const override;
  bool admissible_interior(const State& w, double eps) const override;
  bool has_constraints() const override { return false; }
  std::optional<double> constant_wave_speed() const override { return speed_; }
  double speed() const { return speed_; }

 private:
  double speed_;
  std::string name_ = "advection";
};

/// Burgers u_t + (u^2/2)_x = 0 with S = R.
class BurgersLaw final : public ConservationLaw {
 public:
  int components() const override { return 1; }
  const std::string& name() const override { return name_; }
  State flux(const State& w) const override;
  double max_wave_speed(const State& w) const override;
  bool admissible(const State& w) const override;
  bool admissible_interior(const State& w, double eps) const override;
  bool has_constraints() const override { return false; }

 private:
  std::string name_ = "burgers";
};

/// 1D compressible Euler with ideal-gas EOS, W = (rho, rho u, E).
/// S = { rho > 0, p > 0 }, which is convex for the ideal gas law.
class EulerLaw final : public ConservationLaw {
 public:
  explicit EulerLaw(double gamma = 1.4);
  int components() const override { return 3; }
  const std::string& name() const override { return name_; }
  State flux(const State& w) const override;
  double max_wave_speed(const State& w) const override;
  bool admissible(const State& w) const override;
  bool admissible_interior(const State& w, double eps) const override;
  double blend_to_frontier(const State& point, const State& mean,
                           double eps) const override;

  double gamma() const { return gamma_; }
  double pressure(const State& w) const;
  double velocity(const State& w) const { return w[1] / w[0]; }
  State from_primitive(double rho, double u, double p) const;

 private:
  double gamma_;
  std::string name_ = "euler";
};

std::shared_ptr<const ConservationLaw> advection_law(double speed);
std::shared_ptr<const ConservationLaw> burgers_law();
std::shared_ptr<const ConservationLaw> euler_law(double gamma = 1.4);

inline double blend_to_frontier(const ConservationLaw& law, const State& point,
                                const State& mean, double eps) {
  return law.blend_to_frontier(point, mean, eps);
}

}  // namespace dg1d
