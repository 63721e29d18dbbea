#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "dg1d/ader.hpp"
#include "dg1d/csp_limiter.hpp"
#include "dg1d/dg_operator.hpp"
#include "dg1d/time_integration.hpp"

using namespace dg1d;

namespace {

DGSolution advection_field(int n, int degree) {
  auto mesh = std::make_shared<const Mesh1D>(
      Mesh1D::uniform(0.0, 1.0, n, BoundaryKind::periodic));
  auto basis = std::make_shared<const Basis>(
      Basis::make(BasisKind::modal_legendre, degree));
  return DGSolution::project(mesh, basis, advection_law(1.0), [](double x) {
    return State{1.5 + std::sin(2.0 * M_PI * x)};
  });
}

DGSolution euler_field(int n, int degree) {
  auto mesh = std::make_shared<const Mesh1D>(
      Mesh1D::uniform(0.0, 1.0, n, BoundaryKind::transmissive));
  auto basis = std::make_shared<const Basis>(
      Basis::make(BasisKind::modal_legendre, degree));
  auto law = euler_law(1.4);
  const EulerLaw euler(1.4);
  return DGSolution::project(mesh, basis, law, [&](double x) {
    return x < 0.5 ? euler.from_primitive(1.0, -2.0, 0.4)
                   : euler.from_primitive(1.0, 2.0, 0.4);
  });
}

void BM_SemidiscreteRhsAdvection(benchmark::State& state) {
  const DGSolution sol = advection_field(static_cast<int>(state.range(0)), 2);
  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(sol.basis());
  const NumericalFlux flux = NumericalFlux::make_rusanov();
  for (auto _ : state) {
    benchmark::DoNotOptimize(semidiscrete_rhs(sol, cfg, flux));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SemidiscreteRhsAdvection)->Arg(200)->Arg(800);

void BM_SemidiscreteRhsEuler(benchmark::State& state) {
  DGSolution sol = euler_field(static_cast<int>(state.range(0)), 2);
  limit_solution(sol, 1e-13);
  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(sol.basis());
  const NumericalFlux flux = NumericalFlux::make_rusanov();
  for (auto _ : state) {
    benchmark::DoNotOptimize(semidiscrete_rhs(sol, cfg, flux));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SemidiscreteRhsEuler)->Arg(200)->Arg(800);

void BM_LimiterSweep(benchmark::State& state) {
  DGSolution sol = euler_field(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    DGSolution work = sol;
    benchmark::DoNotOptimize(limit_solution(work, 1e-13));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LimiterSweep)->Arg(200)->Arg(800);

void BM_Ssp3Step(benchmark::State& state) {
  const DGSolution sol = advection_field(static_cast<int>(state.range(0)), 2);
  const SemidiscreteConfig cfg = SemidiscreteConfig::defaults(sol.basis());
  const NumericalFlux flux = NumericalFlux::make_rusanov();
  const auto rhs = [&](const DGSolution& s, double) {
    return semidiscrete_rhs(s, cfg, flux);
  };
  const double dt = compute_dt(sol, {0.9, false, 1e30});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ssp_step(rhs, sol, 0.0, dt, SSPScheme::ssp3()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ssp3Step)->Arg(200);

void BM_AderPredictorStep(benchmark::State& state) {
  const DGSolution sol = advection_field(static_cast<int>(state.range(0)), 2);
  const SpaceTimeBasis stb(sol.basis_ptr(), 2);
  const NumericalFlux flux = NumericalFlux::make_rusanov();
  const double dt = 0.2 * compute_dt(sol, {0.9, false, 1e30});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ader_predictor_step(sol, stb, flux, dt));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AderPredictorStep)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
