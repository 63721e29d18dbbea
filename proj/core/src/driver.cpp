#include "dg1d/driver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "dg1d/ader.hpp"
#include "dg1d/dg_operator.hpp"
#include "dg1d/errors.hpp"
#include "dg1d/initial_conditions.hpp"
#include "dg1d/numerical_flux.hpp"
#include "dg1d/snapshot_io.hpp"
#include "dg1d/time_integration.hpp"

namespace dg1d {

namespace {

std::shared_ptr<const ConservationLaw> make_law(const RunConfig& cfg) {
  switch (cfg.law) {
    case LawKind::advection: return advection_law(cfg.advection_speed);
    case LawKind::burgers: return burgers_law();
    case LawKind::euler: return euler_law(cfg.gamma);
  }
  throw ConfigError("unknown law");
}

NumericalFlux make_flux(const RunConfig& cfg) {
  return cfg.flux == FluxKind::rusanov
             ? NumericalFlux::make_rusanov(cfg.rusanov_jump_factor)
             : NumericalFlux::make_upwind();
}

double wrap_periodic(double x, double x_min, double x_max) {
  const double length = x_max - x_min;
  double y = std::fmod(x - x_min, length);
  if (y < 0.0) y += length;
  return x_min + y;
}

void write_outputs(const DGSolution& sol, const std::string& prefix,
                   const std::string& tag) {
  write_snapshot(sol, prefix + "_" + tag + ".csv");
  write_coefficients(sol, prefix + "_" + tag + "_coeffs.csv");
}

constexpr int kMaxStepRetries = 5;

}  // namespace

RunResult run_simulation(const RunConfig& cfg, const StepObserver& observer) {
  validate(cfg);

  auto law = make_law(cfg);
  auto mesh = std::make_shared<const Mesh1D>(
      Mesh1D::uniform(cfg.x_min, cfg.x_max, cfg.elements, cfg.boundary));
  auto basis =
      std::make_shared<const Basis>(Basis::make(cfg.basis, cfg.degree));
  const NumericalFlux flux = make_flux(cfg);
  const SemidiscreteConfig semi{cfg.flux_mode,
                                gauss_legendre_rule(cfg.degree + 2)};

  const InitialCondition ic = make_initial_condition(cfg, *law);
  DGSolution sol = DGSolution::project(mesh, basis, law, ic.fields);

  RunDiagnostics diag;
  diag.initial_integral = State(law->components());
  diag.final_integral = State(law->components());

  // Projection of rough data can already violate admissibility; limit the
  // initial coefficients before measuring anything.
  if (cfg.limiter) {
    const LimiterReport report = limit_solution(sol, cfg.limiter_eps);
    diag.cells_limited_total += report.cells_limited;
    diag.min_theta = std::min(diag.min_theta, report.min_theta);
  }
  diag.initial_integral = sol.total_integral();

  // Scale for the relative drift: the integral of |W| keeps the measure
  // meaningful when conserved components integrate to zero.
  State drift_scale(law->components());
  for (int k = 0; k < sol.num_elements(); ++k) {
    const State mean = sol.cell_mean(k);
    for (int c = 0; c < mean.size(); ++c) {
      drift_scale[c] += sol.mesh().element_width(k) * std::abs(mean[c]);
    }
  }

  const auto rhs = [&](const DGSolution& s, double) {
    return semidiscrete_rhs(s, semi, flux);
  };

  // Per-stage limiter hook for the SSP family; accumulates into the
  // current step's aggregate.
  LimiterReport step_report;
  const auto stage_hook = [&](DGSolution& s) {
    if (!cfg.limiter) return;
    const LimiterReport report = limit_solution(s, cfg.limiter_eps);
    step_report.cells_limited += report.cells_limited;
    step_report.min_theta = std::min(step_report.min_theta, report.min_theta);
  };

  std::optional<SpaceTimeBasis> stb;
  if (cfg.integrator == IntegratorKind::ader_predictor) {
    stb.emplace(basis, cfg.time_degree());
  }
  const PicardOptions picard{cfg.picard_tol, cfg.picard_max_iter};

  const auto step_once = [&](const DGSolution& y, double t,
                             double dt) -> DGSolution {
    switch (cfg.integrator) {
      case IntegratorKind::ee:
        return ssp_step(rhs, y, t, dt, SSPScheme::forward_euler(), stage_hook);
      case IntegratorKind::ssp2:
        return ssp_step(rhs, y, t, dt, SSPScheme::ssp2(), stage_hook);
      case IntegratorKind::ssp3:
        return ssp_step(rhs, y, t, dt, SSPScheme::ssp3(), stage_hook);
      case IntegratorKind::rk4: {
        DGSolution next =
            rk_step(rhs, y, t, dt, ButcherTableau::classical_rk4());
        stage_hook(next);
        return next;
      }
      case IntegratorKind::ader_ck: {
        DGSolution next = ader_ck_step(y, dt);
        stage_hook(next);
        return next;
      }
      case IntegratorKind::ader_predictor: {
        AderStepInfo info;
        DGSolution next = ader_predictor_step(y, *stb, flux, dt, picard, &info);
        diag.max_picard_iterations =
            std::max(diag.max_picard_iterations, info.max_iterations);
        diag.max_picard_residual =
            std::max(diag.max_picard_residual, info.max_residual);
        stage_hook(next);
        return next;
      }
    }
    throw ConfigError("unknown integrator");
  };

  const TimeStepControl dt_control{cfg.cfl, cfg.limiter, cfg.dt_max};
  const double t_end = cfg.t_end;
  const double time_tol = 1e-12 * std::max(1.0, std::abs(t_end));
  double t = 0.0;

  while (t < t_end - time_tol) {
    double dt = compute_dt(sol, dt_control);
    if (t + dt > t_end) dt = t_end - t;  // land exactly on t_end
    if (!(dt > 0.0)) {
      throw SolverError("time step collapsed to zero at t = " +
                        std::to_string(t));
    }

    step_report = LimiterReport{};
    DGSolution next = sol;
    bool accepted = false;
    for (int attempt = 0; attempt <= kMaxStepRetries; ++attempt) {
      try {
        step_report = LimiterReport{};
        next = step_once(sol, t, dt);
        if (!next.all_finite()) {
          throw SolverError("non-finite coefficients after step");
        }
        accepted = true;
        break;
      } catch (const SolverError& e) {
        if (attempt == kMaxStepRetries) {
          throw SolverError(std::string(e.what()) + " [step " +
                            std::to_string(diag.steps + 1) + ", t = " +
                            std::to_string(t) + ", after " +
                            std::to_string(kMaxStepRetries) + " dt retries]");
        }
        dt *= 0.5;
        ++diag.dt_retries;
      }
    }
    (void)accepted;

    sol = std::move(next);
    t += dt;
    sol.set_time(t);
    ++diag.steps;
    diag.cells_limited_total += step_report.cells_limited;
    diag.min_theta = std::min(diag.min_theta, step_report.min_theta);

    if (observer) {
      StepRecord record;
      record.step = diag.steps;
      record.t = t;
      record.dt = dt;
      record.solution = &sol;
      record.limiter_report = cfg.limiter ? &step_report : nullptr;
      observer(record);
    }
    if (!cfg.output_prefix.empty() && cfg.snapshot_every > 0 &&
        diag.steps % cfg.snapshot_every == 0) {
      write_outputs(sol, cfg.output_prefix,
                    "step" + std::to_string(diag.steps));
    }
  }

  diag.final_integral = sol.total_integral();
  // Components that integrate to exactly zero (shock-tube momentum) borrow
  // the largest component scale instead of dividing by nothing.
  double global_scale = 1e-14;
  for (int c = 0; c < drift_scale.size(); ++c) {
    global_scale = std::max(global_scale, drift_scale[c]);
  }
  double drift = 0.0;
  for (int c = 0; c < diag.final_integral.size(); ++c) {
    const double scale = std::max(
        {std::abs(diag.initial_integral[c]), drift_scale[c], global_scale});
    drift = std::max(
        drift, std::abs(diag.final_integral[c] - diag.initial_integral[c]) /
                   scale);
  }
  diag.conservation_drift = drift;

  if (!cfg.output_prefix.empty()) {
    write_outputs(sol, cfg.output_prefix, "final");
  }
  return RunResult{std::move(sol), diag};
}

SolutionErrors solution_errors(const DGSolution& sol,
                               const std::function<State(double)>& exact) {
  const QuadratureRule rule = gauss_legendre_rule(sol.basis().degree() + 3);
  const int m = sol.components();
  State l1(m), l2(m), linf(m);
  for (int k = 0; k < sol.num_elements(); ++k) {
    const double half_width = 0.5 * sol.mesh().element_width(k);
    for (int q = 0; q < rule.size(); ++q) {
      const double xi = rule.nodes[q];
      const State diff =
          sol.evaluate(k, xi) - exact(sol.mesh().to_physical(k, xi));
      for (int c = 0; c < m; ++c) {
        const double e = std::abs(diff[c]);
        l1[c] += rule.weights[q] * half_width * e;
        l2[c] += rule.weights[q] * half_width * e * e;
        linf[c] = std::max(linf[c], e);
      }
    }
  }
  SolutionErrors out;
  for (int c = 0; c < m; ++c) {
    out.l1 = std::max(out.l1, l1[c]);
    out.l2 = std::max(out.l2, std::sqrt(l2[c]));
    out.linf = std::max(out.linf, linf[c]);
  }
  return out;
}

std::function<State(double)> exact_solution(const RunConfig& cfg, double t) {
  auto law = make_law(cfg);
  const InitialCondition ic = make_initial_condition(cfg, *law);

  if (cfg.law == LawKind::advection) {
    if (cfg.boundary != BoundaryKind::periodic) {
      throw ConfigError(
          "exact advection reference requires periodic boundaries");
    }
    const double a = cfg.advection_speed;
    const double x_min = cfg.x_min, x_max = cfg.x_max;
    const auto fields = ic.fields;
    return [=](double x) {
      return fields(wrap_periodic(x - a * t, x_min, x_max));
    };
  }

  if (cfg.law == LawKind::burgers) {
    if (!ic.smooth_scalar) {
      throw ConfigError("burgers reference needs a smooth scalar profile");
    }
    if (cfg.boundary != BoundaryKind::periodic) {
      throw ConfigError("exact burgers reference requires periodic boundaries");
    }
    const auto u0 = ic.scalar;
    const auto du0 = ic.scalar_derivative;
    const double x_min = cfg.x_min, x_max = cfg.x_max;
    return [=](double x) {
      // Characteristics: u = u0(x - u t), solved by Newton; valid before
      // the first shock time 1 / max|u0'|.
      double u = u0(wrap_periodic(x, x_min, x_max));
      for (int it = 0; it < 100; ++it) {
        const double x0 = wrap_periodic(x - u * t, x_min, x_max);
        const double g = u - u0(x0);
        const double dg = 1.0 + t * du0(x0);
        const double step = g / dg;
        u -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(u))) {
          return State{u};
        }
      }
      throw SolverError(
          "burgers characteristics solve did not converge (post-shock?)");
    };
  }

  throw ConfigError("no exact reference available for law = " +
                    to_string(cfg.law));
}

ErrorTable convergence_study(const RunConfig& base,
                             const std::vector<int>& meshes) {
  if (meshes.size() < 2) {
    throw ConfigError("convergence study needs at least two mesh sizes");
  }
  for (std::size_t i = 1; i < meshes.size(); ++i) {
    if (meshes[i] != 2 * meshes[i - 1]) {
      throw ConfigError("convergence meshes must double: " +
                        std::to_string(meshes[i - 1]) + " -> " +
                        std::to_string(meshes[i]));
    }
  }

  ErrorTable table;
  table.reference = to_string(base.law) + "/" + to_string(base.ic);
  for (int n : meshes) {
    RunConfig cfg = base;
    cfg.elements = n;
    cfg.output_prefix.clear();
    validate(cfg);
    const RunResult result = run_simulation(cfg);
    const SolutionErrors err =
        solution_errors(result.solution, exact_solution(cfg, cfg.t_end));

    ErrorRow row;
    row.elements = n;
    row.l1 = err.l1;
    row.l2 = err.l2;
    row.linf = err.linf;
    if (!table.rows.empty()) {
      const ErrorRow& prev = table.rows.back();
      row.order_l1 = std::log2(prev.l1 / row.l1);
      row.order_l2 = std::log2(prev.l2 / row.l2);
      row.order_linf = std::log2(prev.linf / row.linf);
      row.has_order = true;
    }
    table.rows.push_back(row);
  }
  return table;
}

void write_error_table(const ErrorTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot open '" + path + "' for writing");
  }
  out << "N,L1,L2,Linf,order_L1,order_L2,order_Linf\n";
  out.precision(16);
  for (const ErrorRow& row : table.rows) {
    out << row.elements << "," << row.l1 << "," << row.l2 << "," << row.linf
        << ",";
    if (row.has_order) {
      out << row.order_l1 << "," << row.order_l2 << "," << row.order_linf;
    } else {
      out << ",,";
    }
    out << "\n";
  }
}

}  // namespace dg1d
