#include "rdhweno/rd_core_1d.hpp"

#include <cmath>
#include <stdexcept>

namespace rdh {

double roe_alpha(double lambda_bar, double delta) {
  if (lambda_bar >= delta) return 1.0;
  if (lambda_bar <= -delta) return 0.0;
  const double lp = lambda_bar + delta;
  return lp * lp * (2.0 * delta - lambda_bar) / (4.0 * delta * delta * delta);
}

std::pair<double, double> distribute_scalar_1d(double phi, double alpha) {
  return {(1.0 - alpha) * phi, alpha * phi};
}

std::pair<StateVec, StateVec> distribute_system_1d(const StateVec& phi, const StateVec& ubar,
                                                   const Model1D& model, double delta) {
  const int m = phi.size();
  const EigenSystem es = model.eigensystem(ubar);
  const StateVec psi = es.left * phi;
  StateVec psi1(m), psi2(m);
  for (int k = 0; k < m; ++k) {
    const double a = roe_alpha(es.lambda[k], delta);
    psi1[k] = (1.0 - a) * psi[k];
    psi2[k] = a * psi[k];
  }
  return {es.right * psi1, es.right * psi2};
}

namespace {

/// Source quadrature over [x_i, x_{i+1}] for one component from node windows.
double source_quadrature(const double* sv, const double* sd, double dx,
                         const WeightConfig& wc) {
  return hweno6_integrate({{sv[0], sv[1], sv[2], sv[3]}, {sd[0], sd[1]}, dx}, wc);
}

}  // namespace

StateVec interval_total_residual(const Solution1D& sol, int i, const Model1D& model,
                                 const WeightConfig& wc) {
  const int m = sol.components();
  const double dx = sol.grid.dx();
  StateVec phi = model.flux(sol.u.state(i + 1)) - model.flux(sol.u.state(i));
  if (model.has_source()) {
    // s and its total x-derivative on the window i-1 .. i+2
    double sv[4][kMaxComponents], sd[2][kMaxComponents];
    for (int l = -1; l <= 2; ++l) {
      const double x = sol.grid.x(i + l);
      const SourceEval1D se = model.source(sol.u.state(i + l), x, sol.v.state(i + l));
      for (int c = 0; c < m; ++c) sv[l + 1][c] = se.s[c];
      if (l == 0 || l == 1)
        for (int c = 0; c < m; ++c) sd[l][c] = se.s_total_x[c];
    }
    for (int c = 0; c < m; ++c) {
      const double vals[4] = {sv[0][c], sv[1][c], sv[2][c], sv[3][c]};
      const double ders[2] = {sd[0][c], sd[1][c]};
      phi[c] -= source_quadrature(vals, ders, dx, wc);
    }
  }
  return phi;
}

namespace detail {

void assemble_rhs_1d(const Solution1D& sol, const Model1D& model, const BoundaryPolicy1D& bc,
                     double delta, const WeightConfig& wc, Assembly1D& out) {
  const int n = sol.grid.cells;
  const int m = sol.components();
  const double dx = sol.grid.dx();

  out.rhs.assign(static_cast<size_t>(n + 1) * m, 0.0);
  out.updated.assign(n + 1, 1);
  out.updated[0] = (bc.left == BoundaryKind::dirichlet) ? 0 : 1;
  out.updated[n] = (bc.right == BoundaryKind::dirichlet) ? 0 : 1;

  // node data over [-1, n+1]
  const int nn = n + 3;
  std::vector<double> fv(static_cast<size_t>(nn) * m);
  std::vector<double> sv, sd;
  const bool sourced = model.has_source();
  if (sourced) {
    sv.resize(static_cast<size_t>(nn) * m);
    sd.resize(static_cast<size_t>(nn) * m);
  }
  for (int i = -1; i <= n + 1; ++i) {
    const StateVec f = model.flux(sol.u.state(i));
    for (int c = 0; c < m; ++c) fv[static_cast<size_t>(i + 1) * m + c] = f[c];
    if (sourced) {
      const SourceEval1D se = model.source(sol.u.state(i), sol.grid.x(i), sol.v.state(i));
      for (int c = 0; c < m; ++c) {
        sv[static_cast<size_t>(i + 1) * m + c] = se.s[c];
        sd[static_cast<size_t>(i + 1) * m + c] = se.s_total_x[c];
      }
    }
  }

  auto add = [&](int node, const StateVec& part) {
    for (int c = 0; c < m; ++c) out.rhs[static_cast<size_t>(node) * m + c] += part[c] / dx;
  };

  for (int i = 0; i < n; ++i) {
    StateVec phi(m);
    for (int c = 0; c < m; ++c)
      phi[c] = fv[static_cast<size_t>(i + 2) * m + c] - fv[static_cast<size_t>(i + 1) * m + c];
    if (sourced) {
      for (int c = 0; c < m; ++c) {
        const double vals[4] = {sv[static_cast<size_t>(i) * m + c],
                                sv[static_cast<size_t>(i + 1) * m + c],
                                sv[static_cast<size_t>(i + 2) * m + c],
                                sv[static_cast<size_t>(i + 3) * m + c]};
        const double ders[2] = {sd[static_cast<size_t>(i + 1) * m + c],
                                sd[static_cast<size_t>(i + 2) * m + c]};
        phi[c] -= source_quadrature(vals, ders, dx, wc);
      }
    }
    const StateVec ubar = average_state_1d(sol.u.state(i), sol.u.state(i + 1));
    StateVec phi1(m), phi2(m);
    if (m == 1) {
      const double lam = model.eigensystem(ubar).lambda[0];
      const auto [a, b] = distribute_scalar_1d(phi[0], roe_alpha(lam, delta));
      phi1[0] = a;
      phi2[0] = b;
    } else {
      std::tie(phi1, phi2) = distribute_system_1d(phi, ubar, model, delta);
    }
    if (out.updated[i]) add(i, phi1);
    if (out.updated[i + 1]) add(i + 1, phi2);
  }

  // L1 residue over the gathered residual sums (not divided by |C_i|)
  double acc = 0.0;
  int count = 0;
  for (int i = 0; i <= n; ++i) {
    if (!out.updated[i]) continue;
    double a = 0.0;
    for (int c = 0; c < m; ++c) a += std::abs(out.rhs[static_cast<size_t>(i) * m + c]);
    acc += a * dx;
    ++count;
  }
  out.residue = acc / count;
}

void apply_update_1d(Solution1D& sol, const Assembly1D& a, double dt,
                     std::vector<double>* carry) {
  const int n = sol.grid.cells;
  const int m = sol.components();
  if (carry && carry->size() != a.rhs.size()) carry->assign(a.rhs.size(), 0.0);
  for (int i = 0; i <= n; ++i) {
    if (!a.updated[i]) continue;
    for (int c = 0; c < m; ++c) {
      const size_t k = static_cast<size_t>(i) * m + c;
      if (!carry) {
        sol.u.at(i, c) -= dt * a.rhs[k];
        continue;
      }
      const double d = (*carry)[k] - dt * a.rhs[k];
      const double u0 = sol.u.at(i, c);
      const double y = u0 + d;
      (*carry)[k] = (std::abs(u0) >= std::abs(d)) ? (u0 - y) + d : (d - y) + u0;
      sol.u.at(i, c) = y;
    }
  }
}

}  // namespace detail

double euler_step_1d(Solution1D& sol, const Model1D& model, const BoundaryPolicy1D& bc,
                     double dt, double delta, const WeightConfig& wc) {
  if (!(dt > 0.0)) throw std::invalid_argument("euler_step_1d: dt must be positive");
  detail::Assembly1D a;
  detail::assemble_rhs_1d(sol, model, bc, delta, wc, a);
  detail::apply_update_1d(sol, a, dt);
  if (!sol.u.finite_interior(sol.grid.cells))
    throw DivergenceError("euler_step_1d: non-finite update", -1);
  return a.residue;
}

double l1_residue_1d(const Solution1D& sol, const Model1D& model, const BoundaryPolicy1D& bc,
                     double delta, const WeightConfig& wc) {
  detail::Assembly1D a;
  detail::assemble_rhs_1d(sol, model, bc, delta, wc, a);
  return a.residue;
}

void derivative_sweep_1d(Solution1D& sol, const BoundaryPolicy1D& bc, const WeightConfig& wc) {
  const int n = sol.grid.cells;
  const int m = sol.components();
  const double dx = sol.grid.dx();

  std::vector<double> vnew(static_cast<size_t>(n + 1) * m);
  for (int i = 1; i < n; ++i)
    for (int c = 0; c < m; ++c)
      vnew[static_cast<size_t>(i) * m + c] = hweno4_derivative(
          {{sol.u.at(i - 1, c), sol.u.at(i, c), sol.u.at(i + 1, c)},
           {sol.v.at(i - 1, c), sol.v.at(i + 1, c)},
           dx},
          wc);

  auto boundary_derivative = [&](int node, bool left, const BoundaryData1D& data,
                                 BoundaryKind kind) {
    if (kind == BoundaryKind::dirichlet && data.derivative) {
      const StateVec d = data.derivative(sol.grid.x(node));
      for (int c = 0; c < m; ++c) vnew[static_cast<size_t>(node) * m + c] = d[c];
      return;
    }
    const int dir = left ? 1 : -1;  // one-sided stencil pointing inward
    for (int c = 0; c < m; ++c)
      vnew[static_cast<size_t>(node) * m + c] =
          dir * one_sided_derivative4(sol.u.at(node + 4 * dir, c), sol.u.at(node + 3 * dir, c),
                                      sol.u.at(node + 2 * dir, c), sol.u.at(node + dir, c),
                                      sol.u.at(node, c), dx);
  };
  boundary_derivative(0, true, bc.left_data, bc.left);
  boundary_derivative(n, false, bc.right_data, bc.right);

  for (int i = 0; i <= n; ++i)
    for (int c = 0; c < m; ++c) sol.v.at(i, c) = vnew[static_cast<size_t>(i) * m + c];
}

}  // namespace rdh
