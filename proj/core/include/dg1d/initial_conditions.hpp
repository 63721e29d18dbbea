#pragma once

#include <functional>

#include "dg1d/config.hpp"
#include "dg1d/conservation_law.hpp"
#include "dg1d/state.hpp"

namespace dg1d {

/// Initial data built from a RunConfig: conserved fields plus, for smooth
/// scalar profiles, the analytic derivative needed by the Burgers
/// characteristics solve.
struct InitialCondition {
  std::function<State(double)> fields;
  std::function<double(double)> scalar;             // scalar profiles only
  std::function<double(double)> scalar_derivative;  // scalar profiles only
  bool smooth_scalar = false;
};

InitialCondition make_initial_condition(const RunConfig& cfg,
                                        const ConservationLaw& law);

}  // namespace dg1d
