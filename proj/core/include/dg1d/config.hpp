#pragma once

#include <iosfwd>
#include <string>

#include "dg1d/basis.hpp"
#include "dg1d/dg_operator.hpp"
#include "dg1d/mesh.hpp"
#include "dg1d/numerical_flux.hpp"

namespace dg1d {

enum class LawKind { advection, burgers, euler };
enum class IntegratorKind { ee, ssp2, ssp3, rk4, ader_ck, ader_predictor };
enum class InitialConditionKind { sine, gaussian, sod, double_rarefaction };

/// Everything a run needs, parsed from `key = value` lines with `#`
/// comments. Names and numeric ranges are validated at parse time.
struct RunConfig {
  // law
  LawKind law = LawKind::advection;
  double advection_speed = 1.0;
  double gamma = 1.4;

  // mesh
  double x_min = 0.0;
  double x_max = 1.0;
  int elements = 100;
  BoundaryKind boundary = BoundaryKind::periodic;

  // scheme
  BasisKind basis = BasisKind::modal_legendre;
  int degree = 1;
  FluxKind flux = FluxKind::rusanov;
  double rusanov_jump_factor = 0.5;
  FluxMode flux_mode = FluxMode::quadrature;
  IntegratorKind integrator = IntegratorKind::ssp2;
  double cfl = 0.9;
  double t_end = 1.0;
  double dt_max = 1e30;
  bool limiter = false;
  double limiter_eps = 1e-13;
  int p_time = -1;  // ADER time degree; -1 means "match the spatial degree"
  double picard_tol = 1e-12;
  int picard_max_iter = 30;

  // initial condition
  InitialConditionKind ic = InitialConditionKind::sine;
  double ic_offset = 0.0;
  double ic_amplitude = 1.0;
  double ic_frequency = 1.0;
  double ic_center = 0.5;   // gaussian bump center / shock-tube interface
  double ic_width = 0.1;    // gaussian standard deviation
  bool ic_center_set = false;

  // output
  std::string output_prefix;  // empty: write nothing
  int snapshot_every = 0;     // 0: final snapshot only (when prefix set)

  int time_degree() const { return p_time < 0 ? degree : p_time; }
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

/// Cross-field validation (flux/law compatibility, ranges). parse_config
/// runs this; callers mutating a config can re-run it.
void validate(const RunConfig& cfg);

std::string to_string(LawKind);
std::string to_string(IntegratorKind);
std::string to_string(InitialConditionKind);
std::string to_string(BasisKind);

}  // namespace dg1d
