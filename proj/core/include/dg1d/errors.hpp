#pragma once

#include <stdexcept>
#include <string>

namespace dg1d {

/// Invalid user-facing configuration: bad key, bad value, unreadable file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure while advancing the solution: non-convergent iteration,
/// non-finite coefficients, or a state outside the admissible set.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state left the admissible set S where the scheme requires membership.
/// The message carries element/face context when known.
class AdmissibilityError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace dg1d
