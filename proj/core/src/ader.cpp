#include "dg1d/ader.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

double lagrange_at(const std::vector<double>& nodes, int j, double x) {
  double v = 1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (static_cast<int>(i) == j) continue;
    v *= (x - nodes[i]) / (nodes[j] - nodes[i]);
  }
  return v;
}

double lagrange_deriv_at(const std::vector<double>& nodes, int j, double x) {
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (static_cast<int>(k) == j) continue;
    double term = 1.0 / (nodes[j] - nodes[k]);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (static_cast<int>(i) == j || i == k) continue;
      term *= (x - nodes[i]) / (nodes[j] - nodes[i]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

SpaceTimeBasis::SpaceTimeBasis(std::shared_ptr<const Basis> space,
                               int time_degree)
    : space_(std::move(space)), time_degree_(time_degree) {
  if (time_degree_ < 0) {
    throw ConfigError("space-time basis needs a nonnegative time degree");
  }
  const int nt = time_size();

  // Collocation nodes: Gauss-Legendre points mapped to [0,1].
  const QuadratureRule gauss = gauss_legendre_rule(nt);
  time_nodes_.resize(nt);
  time_weights_.resize(nt);
  for (int s = 0; s < nt; ++s) {
    time_nodes_[s] = 0.5 * (gauss.nodes[s] + 1.0);
    time_weights_[s] = 0.5 * gauss.weights[s];
  }

  // With collocation at the quadrature nodes the time mass matrix is
  // diagonal; assemble by that same (exact) quadrature.
  time_mass_ = Eigen::MatrixXd::Zero(nt, nt);
  time_stiffness_ = Eigen::MatrixXd::Zero(nt, nt);
  for (int r = 0; r < nt; ++r) {
    const double tau = time_nodes_[r];
    const double w = time_weights_[r];
    for (int i = 0; i < nt; ++i) {
      const double vi = time_eval(i, tau);
      for (int j = 0; j < nt; ++j) {
        time_mass_(i, j) += w * vi * time_eval(j, tau);
        time_stiffness_(i, j) += w * vi * time_derivative(j, tau);
      }
    }
  }

  Eigen::VectorXd start_vals(nt), end_vals(nt);
  for (int s = 0; s < nt; ++s) {
    start_vals[s] = time_eval(s, 0.0);
    end_vals[s] = time_eval(s, 1.0);
  }
  endpoint_start_ = start_vals * start_vals.transpose();
  endpoint_end_ = end_vals * end_vals.transpose();
  initial_injection_ = start_vals;

  // Causal left-hand operator 1_{n+1} - (K^t)^T, factored once.
  const Eigen::MatrixXd ltime = endpoint_end_ - time_stiffness_.transpose();
  const auto lu = ltime.partialPivLu();
  picard_initial_ = lu.solve(initial_injection_);
  picard_time_ = lu.solve(time_mass_);
  picard_space_ = space_->mass_inverse() * space_->stiffness();

  // Spatial quadrature shared by flux projection and corrector volume term.
  space_rule_ = gauss_legendre_rule(space_->degree() + 2);
  const int nr = space_rule_.size();
  const int nx = space_size();
  space_values_.resize(nr, nx);
  space_derivs_.resize(nr, nx);
  for (int r = 0; r < nr; ++r) {
    for (int q = 0; q < nx; ++q) {
      space_values_(r, q) = space_->evaluate(q, space_rule_.nodes[r]);
      space_derivs_(r, q) = space_->derivative(q, space_rule_.nodes[r]);
    }
  }
  Eigen::MatrixXd weighted_values = space_values_.transpose();  // (q, r)
  for (int r = 0; r < nr; ++r) {
    weighted_values.col(r) *= space_rule_.weights[r];
  }
  flux_projection_ = space_->mass_inverse() * weighted_values;
}

double SpaceTimeBasis::time_eval(int s, double tau) const {
  return lagrange_at(time_nodes_, s, tau);
}

double SpaceTimeBasis::time_derivative(int s, double tau) const {
  return lagrange_deriv_at(time_nodes_, s, tau);
}

State SpaceTimePredictor::layer_value(const SpaceTimeBasis& stb, int s,
                                      double xi) const {
  State out(components);
  for (int q = 0; q < space_size; ++q) {
    const double psi = stb.space().evaluate(q, xi);
    for (int c = 0; c < components; ++c) out[c] += psi * at(s, q, c);
  }
  return out;
}

State SpaceTimePredictor::value(const SpaceTimeBasis& stb, double tau,
                                double xi) const {
  State out(components);
  for (int s = 0; s < time_size; ++s) {
    const double chi = stb.time_eval(s, tau);
    const State layer = layer_value(stb, s, xi);
    for (int c = 0; c < components; ++c) out[c] += chi * layer[c];
  }
  return out;
}

namespace {

// Flux expansion coefficients of one time layer on the spatial basis:
// collocation for nodal bases, quadrature L2 projection for modal.
void layer_flux_coeffs(const SpaceTimeBasis& stb, const ConservationLaw& law,
                       const SpaceTimePredictor& block, int s,
                       Eigen::MatrixXd& out /* (q, c) */) {
  const int nx = block.space_size;
  const int m = block.components;
  if (stb.space().is_nodal()) {
    for (int q = 0; q < nx; ++q) {
      State w(m);
      for (int c = 0; c < m; ++c) w[c] = block.at(s, q, c);
      const State f = law.flux(w);
      for (int c = 0; c < m; ++c) out(q, c) = f[c];
    }
    return;
  }
  const QuadratureRule& rule = stb.space_rule();
  Eigen::MatrixXd point_flux(rule.size(), m);
  for (int r = 0; r < rule.size(); ++r) {
    State w(m);
    for (int q = 0; q < nx; ++q) {
      const double v = stb.space_values()(r, q);
      for (int c = 0; c < m; ++c) w[c] += v * block.at(s, q, c);
    }
    const State f = law.flux(w);
    for (int c = 0; c < m; ++c) point_flux(r, c) = f[c];
  }
  out = stb.flux_projection() * point_flux;
}

}  // namespace

SpaceTimePredictor predict_element(const SpaceTimeBasis& stb,
                                   const ConservationLaw& law,
                                   std::span<const double> elem_coeffs,
                                   int components, double dt, double dx,
                                   const PicardOptions& opts) {
  const int nt = stb.time_size();
  const int nx = stb.space_size();
  const int m = components;
  if (static_cast<int>(elem_coeffs.size()) != nx * m) {
    throw SolverError("predict_element: coefficient block has wrong shape");
  }

  SpaceTimePredictor block;
  block.time_size = nt;
  block.space_size = nx;
  block.components = m;
  block.coeffs.assign(static_cast<std::size_t>(nt) * nx * m, 0.0);

  // Initial guess: constant-in-time extension of the datum, which is also
  // the exact fixed point when the flux divergence vanishes.
  for (int s = 0; s < nt; ++s) {
    for (int q = 0; q < nx; ++q) {
      for (int c = 0; c < m; ++c) {
        block.at(s, q, c) = elem_coeffs[static_cast<std::size_t>(q) * m + c];
      }
    }
  }

  // Datum part T0 * (W^n)^T of the fixed-point map, constant over iterations.
  const Eigen::VectorXd& t0 = stb.picard_initial();
  const Eigen::MatrixXd& t1 = stb.picard_time();
  const Eigen::MatrixXd& sx = stb.picard_space();
  const double scale = 2.0 * dt / dx;

  Eigen::MatrixXd flux_coeffs(nx, m);
  std::vector<Eigen::MatrixXd> g(nt, Eigen::MatrixXd(nx, m));
  block.residual_history.reserve(opts.max_iter);

  for (int it = 1; it <= opts.max_iter; ++it) {
    for (int s = 0; s < nt; ++s) {
      layer_flux_coeffs(stb, law, block, s, flux_coeffs);
      g[s] = sx * flux_coeffs;  // (q, c): spatial contraction of the layer
    }

    double residual = 0.0;
    bool finite = true;
    for (int i = 0; i < nt; ++i) {
      for (int q = 0; q < nx; ++q) {
        for (int c = 0; c < m; ++c) {
          double v = t0[i] * elem_coeffs[static_cast<std::size_t>(q) * m + c];
          for (int s = 0; s < nt; ++s) {
            v -= scale * t1(i, s) * g[s](q, c);
          }
          if (!std::isfinite(v)) finite = false;
          residual = std::max(residual, std::abs(v - block.at(i, q, c)));
          block.at(i, q, c) = v;
        }
      }
    }
    block.iterations = it;
    block.residual = residual;
    block.residual_history.push_back(residual);
    if (!finite) break;  // diverged: report below with the history
    if (residual <= opts.tol) {
      return block;
    }
  }

  std::ostringstream os;
  os << "space-time predictor did not converge to " << opts.tol << " in "
     << opts.max_iter << " iterations; residual history:";
  for (double r : block.residual_history) os << " " << r;
  throw SolverError(os.str());
}

std::vector<SpaceTimePredictor> predict_all(const DGSolution& sol,
                                            const SpaceTimeBasis& stb,
                                            double dt,
                                            const PicardOptions& opts) {
  const int n = sol.num_elements();
  const int block_len = sol.basis_size() * sol.components();
  std::vector<SpaceTimePredictor> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::span<const double> elem(sol.raw().data() +
                                     sol.index(k, 0, 0),
                                 static_cast<std::size_t>(block_len));
    try {
      out.push_back(predict_element(stb, sol.law(), elem, sol.components(), dt,
                                    sol.mesh().element_width(k), opts));
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " [element " +
                        std::to_string(k) + "]");
    }
  }
  return out;
}

namespace {

State predictor_trace(const SpaceTimeBasis& stb,
                      const SpaceTimePredictor& block, int s, Side side) {
  const Eigen::VectorXd& tr = (side == Side::left)
                                  ? stb.space().left_trace()
                                  : stb.space().right_trace();
  State out(block.components);
  for (int q = 0; q < block.space_size; ++q) {
    for (int c = 0; c < block.components; ++c) {
      out[c] += tr[q] * block.at(s, q, c);
    }
  }
  return out;
}

}  // namespace

std::vector<State> ader_face_flux_integrals(
    const DGSolution& sol, const SpaceTimeBasis& stb,
    const std::vector<SpaceTimePredictor>& predictors,
    const NumericalFlux& flux, double dt) {
  const Mesh1D& mesh = sol.mesh();
  const ConservationLaw& law = sol.law();
  const int n = sol.num_elements();
  const int nt = stb.time_size();
  const int m = sol.components();

  std::vector<State> integrals(static_cast<std::size_t>(n) + 1, State(m));
  for (int f = 0; f <= n; ++f) {
    if (f == n && mesh.boundary_kind() == BoundaryKind::periodic) {
      integrals[f] = integrals[0];
      break;
    }
    const int left = (f == 0) ? mesh.neighbor(0, Side::left).index : f - 1;
    const int right = (f == n) ? mesh.neighbor(n - 1, Side::right).index : f;
    // Ghost neighbors resolve to the interior element itself, so the
    // transmissive trace falls out of the same expression.
    State acc(m);
    for (int s = 0; s < nt; ++s) {
      const State w_minus = predictor_trace(stb, predictors[left], s, Side::right);
      const State w_plus = predictor_trace(stb, predictors[right], s, Side::left);
      try {
        acc += stb.time_weights()[s] * flux(law, w_plus, w_minus, +1.0).value;
      } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + " [face " +
                          std::to_string(f) + ", time node " +
                          std::to_string(s + 1) + "]");
      }
    }
    integrals[f] = dt * acc;
  }
  return integrals;
}

DGSolution ader_corrector_step(const DGSolution& sol, const SpaceTimeBasis& stb,
                               const std::vector<SpaceTimePredictor>& predictors,
                               const NumericalFlux& flux, double dt) {
  const Mesh1D& mesh = sol.mesh();
  const ConservationLaw& law = sol.law();
  const Basis& basis = sol.basis();
  const int n = sol.num_elements();
  const int p = sol.basis_size();
  const int m = sol.components();
  const int nt = stb.time_size();
  const QuadratureRule& rule = stb.space_rule();

  const std::vector<State> face_integrals =
      ader_face_flux_integrals(sol, stb, predictors, flux, dt);

  DGSolution out = sol;
  Eigen::MatrixXd volume(p, m), surface(p, m);
  const Eigen::VectorXd& lt = basis.left_trace();
  const Eigen::VectorXd& rt = basis.right_trace();

  for (int k = 0; k < n; ++k) {
    const SpaceTimePredictor& block = predictors[k];
    volume.setZero();
    for (int s = 0; s < nt; ++s) {
      const double wt = stb.time_weights()[s];
      for (int r = 0; r < rule.size(); ++r) {
        State w(m);
        for (int q = 0; q < block.space_size; ++q) {
          const double v = stb.space_values()(r, q);
          for (int c = 0; c < m; ++c) w[c] += v * block.at(s, q, c);
        }
        const State f = law.flux(w);
        const double wq = wt * rule.weights[r];
        for (int i = 0; i < p; ++i) {
          const double wd = wq * stb.space_derivs()(r, i);
          for (int c = 0; c < m; ++c) volume(i, c) += wd * f[c];
        }
      }
    }
    volume *= dt;

    const State& phi_left = face_integrals[k];
    const State& phi_right = face_integrals[k + 1];
    for (int i = 0; i < p; ++i) {
      for (int c = 0; c < m; ++c) {
        surface(i, c) = rt[i] * phi_right[c] - lt[i] * phi_left[c];
      }
    }

    const Eigen::MatrixXd update = (2.0 / mesh.element_width(k)) *
                                   (basis.mass_inverse() * (volume - surface));
    for (int j = 0; j < p; ++j) {
      for (int c = 0; c < m; ++c) {
        out.coeff(k, j, c) += update(j, c);
      }
    }
  }
  return out;
}

DGSolution ader_predictor_step(const DGSolution& sol, const SpaceTimeBasis& stb,
                               const NumericalFlux& flux, double dt,
                               const PicardOptions& opts, AderStepInfo* info) {
  const std::vector<SpaceTimePredictor> predictors =
      predict_all(sol, stb, dt, opts);
  if (info != nullptr) {
    for (const auto& block : predictors) {
      info->max_iterations = std::max(info->max_iterations, block.iterations);
      info->max_residual = std::max(info->max_residual, block.residual);
    }
  }
  return ader_corrector_step(sol, stb, predictors, flux, dt);
}

// ------------------------------------------------------- Cauchy-Kowalewski

State ck_ader_advection_flux(double a, const Basis& modal,
                             std::span<const double> left_coeffs,
                             double dx_left,
                             std::span<const double> right_coeffs,
                             double dx_right, int components, double dt) {
  const int p = modal.size();
  State out(components);
  if (a == 0.0) return out;

  const bool from_left = a > 0.0;
  const std::span<const double> coeffs = from_left ? left_coeffs : right_coeffs;
  const double dx = from_left ? dx_left : dx_right;
  const double face_xi = from_left ? 1.0 : -1.0;

  // Spatial derivatives of the upwind trace polynomial at the face, then
  // d_t^k W = (-a)^k d_x^k W makes the time Taylor series explicit; the
  // series is finite, so the flux time integral is exact:
  //   int_0^dt a W*(t) dt = a sum_k (-a)^k D_k dt^{k+1} / (k+1)!.
  const auto derivs =
      monic_legendre_derivatives(p, face_xi, modal.degree());
  double ref_to_phys = 1.0;  // (2/dx)^d
  double time_factor = dt;   // (-a)^d dt^{d+1} / (d+1)!
  for (int d = 0; d <= modal.degree(); ++d) {
    for (int c = 0; c < components; ++c) {
      double spatial = 0.0;
      for (int j = 0; j < p; ++j) {
        spatial += derivs[d][j] * coeffs[static_cast<std::size_t>(j) * components + c];
      }
      out[c] += a * time_factor * ref_to_phys * spatial;
    }
    ref_to_phys *= 2.0 / dx;
    time_factor *= -a * dt / (d + 2.0);
  }
  return out;
}

namespace {

double advection_speed_or_throw(const DGSolution& sol) {
  const auto speed = sol.law().constant_wave_speed();
  if (!speed) {
    throw ConfigError(
        "the Cauchy-Kowalewski path requires the linear advection law");
  }
  return *speed;
}

}  // namespace

std::vector<State> ck_face_flux_integrals(const DGSolution& sol, double dt) {
  const double a = advection_speed_or_throw(sol);
  const Mesh1D& mesh = sol.mesh();
  const int n = sol.num_elements();
  const int m = sol.components();
  const int p = sol.basis_size();

  // Work in modal coordinates; the transform is the identity when the
  // solution basis is already modal.
  const Basis modal = Basis::make(BasisKind::modal_legendre, sol.basis().degree());
  const bool convert = sol.basis().kind() != BasisKind::modal_legendre;
  Eigen::MatrixXd to_modal;
  if (convert) to_modal = change_of_basis(sol.basis(), modal);

  std::vector<double> modal_coeffs(static_cast<std::size_t>(n) * p * m);
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < m; ++c) {
      for (int j = 0; j < p; ++j) {
        double v = 0.0;
        if (convert) {
          for (int i = 0; i < p; ++i) v += to_modal(j, i) * sol.coeff(k, i, c);
        } else {
          v = sol.coeff(k, j, c);
        }
        modal_coeffs[(static_cast<std::size_t>(k) * p + j) * m + c] = v;
      }
    }
  }
  const auto elem = [&](int k) {
    return std::span<const double>(
        modal_coeffs.data() + static_cast<std::size_t>(k) * p * m,
        static_cast<std::size_t>(p) * m);
  };

  std::vector<State> integrals(static_cast<std::size_t>(n) + 1, State(m));
  for (int f = 0; f <= n; ++f) {
    if (f == n && mesh.boundary_kind() == BoundaryKind::periodic) {
      integrals[f] = integrals[0];
      break;
    }
    const int left = (f == 0) ? mesh.neighbor(0, Side::left).index : f - 1;
    const int right = (f == n) ? mesh.neighbor(n - 1, Side::right).index : f;
    integrals[f] = ck_ader_advection_flux(
        a, modal, elem(left), mesh.element_width(left), elem(right),
        mesh.element_width(right), m, dt);
  }
  return integrals;
}

DGSolution ader_ck_step(const DGSolution& sol, double dt) {
  const double a = advection_speed_or_throw(sol);
  const Mesh1D& mesh = sol.mesh();
  const Basis& basis = sol.basis();
  const int n = sol.num_elements();
  const int p = sol.basis_size();
  const int m = sol.components();

  const std::vector<State> face_integrals = ck_face_flux_integrals(sol, dt);

  // In-cell evolution W(t, x) = W^n(x - a t): quadrature in time and space;
  // the shifted evaluation extends the element polynomial past [-1,1].
  const QuadratureRule time_rule = gauss_legendre_rule(basis.degree() + 1);
  const QuadratureRule space_rule = gauss_legendre_rule(basis.degree() + 2);

  DGSolution out = sol;
  Eigen::MatrixXd volume(p, m), surface(p, m);
  const Eigen::VectorXd& lt = basis.left_trace();
  const Eigen::VectorXd& rt = basis.right_trace();

  for (int k = 0; k < n; ++k) {
    const double dx = mesh.element_width(k);
    volume.setZero();
    for (int s = 0; s < time_rule.size(); ++s) {
      const double tau = 0.5 * (time_rule.nodes[s] + 1.0);
      const double wt = 0.5 * time_rule.weights[s];
      const double shift = 2.0 * a * tau * dt / dx;
      for (int r = 0; r < space_rule.size(); ++r) {
        const double xi = space_rule.nodes[r] - shift;
        State w(m);
        for (int j = 0; j < p; ++j) {
          const double v = basis.evaluate(j, xi);
          for (int c = 0; c < m; ++c) w[c] += v * sol.coeff(k, j, c);
        }
        const double wq = wt * space_rule.weights[r];
        for (int i = 0; i < p; ++i) {
          const double wd = wq * basis.derivative(i, space_rule.nodes[r]);
          for (int c = 0; c < m; ++c) volume(i, c) += wd * a * w[c];
        }
      }
    }
    volume *= dt;

    const State& phi_left = face_integrals[k];
    const State& phi_right = face_integrals[k + 1];
    for (int i = 0; i < p; ++i) {
      for (int c = 0; c < m; ++c) {
        surface(i, c) = rt[i] * phi_right[c] - lt[i] * phi_left[c];
      }
    }

    const Eigen::MatrixXd update =
        (2.0 / dx) * (basis.mass_inverse() * (volume - surface));
    for (int j = 0; j < p; ++j) {
      for (int c = 0; c < m; ++c) {
        out.coeff(k, j, c) += update(j, c);
      }
    }
  }
  return out;
}

}  // namespace dg1d
