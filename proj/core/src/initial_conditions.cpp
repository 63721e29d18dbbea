#include "dg1d/initial_conditions.hpp"

#include <cmath>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

InitialCondition make_initial_condition(const RunConfig& cfg,
                                        const ConservationLaw& law) {
  InitialCondition ic;
  const double midpoint =
      cfg.ic_center_set ? cfg.ic_center : 0.5 * (cfg.x_min + cfg.x_max);

  switch (cfg.ic) {
    case InitialConditionKind::sine: {
      const double offset = cfg.ic_offset;
      const double amp = cfg.ic_amplitude;
      const double freq = cfg.ic_frequency;
      ic.scalar = [=](double x) {
        return offset + amp * std::sin(kTwoPi * freq * x);
      };
      ic.scalar_derivative = [=](double x) {
        return amp * kTwoPi * freq * std::cos(kTwoPi * freq * x);
      };
      ic.smooth_scalar = true;
      break;
    }
    case InitialConditionKind::gaussian: {
      const double offset = cfg.ic_offset;
      const double amp = cfg.ic_amplitude;
      const double center = midpoint;
      const double width = cfg.ic_width;
      if (!(width > 0.0)) {
        throw ConfigError("gaussian initial condition needs ic_width > 0");
      }
      ic.scalar = [=](double x) {
        const double z = (x - center) / width;
        return offset + amp * std::exp(-0.5 * z * z);
      };
      ic.scalar_derivative = [=](double x) {
        const double z = (x - center) / width;
        return -amp * z / width * std::exp(-0.5 * z * z);
      };
      ic.smooth_scalar = true;
      break;
    }
    case InitialConditionKind::sod:
    case InitialConditionKind::double_rarefaction: {
      const auto* euler = dynamic_cast<const EulerLaw*>(&law);
      if (euler == nullptr) {
        throw ConfigError("shock-tube initial data requires the euler law");
      }
      const bool sod = cfg.ic == InitialConditionKind::sod;
      const State left = sod ? euler->from_primitive(1.0, 0.0, 1.0)
                             : euler->from_primitive(1.0, -2.0, 0.4);
      const State right = sod ? euler->from_primitive(0.125, 0.0, 0.1)
                              : euler->from_primitive(1.0, 2.0, 0.4);
      ic.fields = [=](double x) { return x < midpoint ? left : right; };
      return ic;
    }
  }

  if (law.components() != 1) {
    throw ConfigError("scalar initial data fed to a system of equations");
  }
  const auto scalar = ic.scalar;
  ic.fields = [scalar](double x) { return State{scalar(x)}; };
  return ic;
}

}  // namespace dg1d
