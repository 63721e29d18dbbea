#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dg1d/config.hpp"
#include "dg1d/csp_limiter.hpp"
#include "dg1d/dg_solution.hpp"

namespace dg1d {

struct RunDiagnostics {
  int steps = 0;
  int dt_retries = 0;
  long long cells_limited_total = 0;
  double min_theta = 1.0;
  int max_picard_iterations = 0;
  double max_picard_residual = 0.0;
  State initial_integral;
  State final_integral;
  /// max over components of |final - initial| / max(|initial|, 1e-14).
  double conservation_drift = 0.0;
};

/// Observation point handed to the step observer after every accepted step.
struct StepRecord {
  int step = 0;
  double t = 0.0;
  double dt = 0.0;
  const DGSolution* solution = nullptr;
  const LimiterReport* limiter_report = nullptr;  // null when limiter off
};

using StepObserver = std::function<void(const StepRecord&)>;

struct RunResult {
  DGSolution solution;
  RunDiagnostics diagnostics;
};

/// Integrates the configured problem to t_end (final step clipped to land
/// exactly). Writes snapshots when cfg.output_prefix is set. On a solver
/// error mid-step the step is retried with halved dt, at most five times.
RunResult run_simulation(const RunConfig& cfg, const StepObserver& observer = {});

struct SolutionErrors {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Quadrature errors against a reference field, Gauss-Legendre with
/// degree+3 points per element; the max over components is reported.
SolutionErrors solution_errors(const DGSolution& sol,
                               const std::function<State(double)>& exact);

/// Exact solution of the configured problem at time t: translated initial
/// data for periodic advection, a characteristics solve for pre-shock
/// Burgers. Throws ConfigError when no reference is available.
std::function<State(double)> exact_solution(const RunConfig& cfg, double t);

struct ErrorRow {
  int elements = 0;
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
  // log2(e_N / e_{2N}), defined from the second row on.
  double order_l1 = 0.0, order_l2 = 0.0, order_linf = 0.0;
  bool has_order = false;
};

struct ErrorTable {
  std::string reference;
  std::vector<ErrorRow> rows;
};

/// Runs the configured problem on each mesh (sizes must double) and
/// tabulates errors and observed orders against the exact solution.
ErrorTable convergence_study(const RunConfig& base,
                             const std::vector<int>& meshes);

void write_error_table(const ErrorTable& table, const std::string& path);

}  // namespace dg1d
