#include "dg1d/conservation_law.hpp"

#include <cmath>
#include <sstream>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

std::string describe(const State& w) {
  std::ostringstream os;
  os << "(";
  for (int c = 0; c < w.size(); ++c) {
    if (c > 0) os << ", ";
    os << w[c];
  }
  os << ")";
  return os.str();
}

constexpr int kBisectionIterations = 60;

}  // namespace

double ConservationLaw::bisect_blend(const State& point, const State& mean,
                                     double eps, double lo, double hi) const {
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (admissible_interior(blend(point, mid, mean), eps)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;  // the feasible end of the bracket
}

double ConservationLaw::blend_to_frontier(const State& point,
                                          const State& mean,
                                          double eps) const {
  if (!admissible_interior(mean, eps)) {
    throw AdmissibilityError("blend_to_frontier: mean state " +
                             describe(mean) + " is not interior-admissible");
  }
  if (admissible_interior(point, eps)) return 1.0;
  return bisect_blend(point, mean, eps, 0.0, 1.0);
}

// ---------------------------------------------------------------- advection

AdvectionLaw::AdvectionLaw(double speed) : speed_(speed) {
  if (!std::isfinite(speed)) {
    throw ConfigError("advection speed must be finite");
  }
}

State AdvectionLaw::flux(const State& w) const { return {speed_ * w[0]}; }

double AdvectionLaw::max_wave_speed(const State&) const {
  return std::abs(speed_);
}

bool AdvectionLaw::admissible(const State& w) const { return w.all_finite(); }

bool AdvectionLaw::admissible_interior(const State& w, double) const {
  return w.all_finite();
}

// ------------------------------------------------------------------ burgers

State BurgersLaw::flux(const State& w) const { return {0.5 * w[0] * w[0]}; }

double BurgersLaw::max_wave_speed(const State& w) const {
  return std::abs(w[0]);
}

bool BurgersLaw::admissible(const State& w) const { return w.all_finite(); }

bool BurgersLaw::admissible_interior(const State& w, double) const {
  return w.all_finite();
}

// -------------------------------------------------------------------- euler

EulerLaw::EulerLaw(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) {
    throw ConfigError("euler law requires gamma > 1");
  }
}

double EulerLaw::pressure(const State& w) const {
  return (gamma_ - 1.0) * (w[2] - 0.5 * w[1] * w[1] / w[0]);
}

State EulerLaw::from_primitive(double rho, double u, double p) const {
  return {rho, rho * u, p / (gamma_ - 1.0) + 0.5 * rho * u * u};
}

State EulerLaw::flux(const State& w) const {
  const double u = w[1] / w[0];
  const double p = pressure(w);
  return {w[1], w[1] * u + p, u * (w[2] + p)};
}

double EulerLaw::max_wave_speed(const State& w) const {
  if (!admissible(w)) {
    throw AdmissibilityError("euler wave speed requested at inadmissible state " +
                             describe(w));
  }
  return std::abs(w[1] / w[0]) + std::sqrt(gamma_ * pressure(w) / w[0]);
}

bool EulerLaw::admissible(const State& w) const {
  return w.all_finite() && w[0] > 0.0 && pressure(w) > 0.0;
}

bool EulerLaw::admissible_interior(const State& w, double eps) const {
  return w.all_finite() && w[0] >= eps && pressure(w) >= eps;
}

double EulerLaw::blend_to_frontier(const State& point, const State& mean,
                                   double eps) const {
  if (!admissible_interior(mean, eps)) {
    throw AdmissibilityError("blend_to_frontier: mean state " +
                             describe(mean) + " is not interior-admissible");
  }
  if (admissible_interior(point, eps)) return 1.0;

  // Density is linear along the blend: closed-form cap first.
  double cap = 1.0;
  if (point[0] < eps) {
    cap = (mean[0] - eps) / (mean[0] - point[0]);
  }
  if (admissible_interior(blend(point, cap, mean), eps)) {
    return cap;
  }
  // Pressure is nonlinear in theta; bisect inside the density-feasible range.
  return bisect_blend(point, mean, eps, 0.0, cap);
}

// ---------------------------------------------------------------- factories

std::shared_ptr<const ConservationLaw> advection_law(double speed) {
  return std::make_shared<AdvectionLaw>(speed);
}

std::shared_ptr<const ConservationLaw> burgers_law() {
  return std::make_shared<BurgersLaw>();
}

std::shared_ptr<const ConservationLaw> euler_law(double gamma) {
  return std::make_shared<EulerLaw>(gamma);
}

}  // namespace dg1d
