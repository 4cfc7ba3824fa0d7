#include "rdhweno/rd_core_2d.hpp"

#include "rdhweno/rd_core_1d.hpp"  // roe_alpha

#include <cmath>
#include <stdexcept>

namespace rdh {

namespace {

double quad6(double vm1, double v0, double v1, double v2, double d0, double d1, double dx,
             const WeightConfig& wc) {
  return hweno6_integrate({{vm1, v0, v1, v2}, {d0, d1}, dx}, wc);
}

}  // namespace

StateVec edge_flux_integral(const Solution2D& sol, const Model2D& model, const Edge& edge,
                            const WeightConfig& wc) {
  const int m = sol.components();
  const int i = edge.i, j = edge.j;
  StateVec out(m);
  if (edge.orientation == Edge::Orientation::vertical) {
    const double x = sol.grid.x(i), dy = sol.grid.dy();
    StateVec f[4];
    for (int k = -1; k <= 2; ++k)
      f[k + 1] = model.flux_x(sol.u.state(i, j + k), x, sol.grid.y(j + k));
    const StateVec d0 = model.jacobian_x(sol.u.state(i, j), x, sol.grid.y(j)) *
                        sol.w.state(i, j);
    const StateVec d1 = model.jacobian_x(sol.u.state(i, j + 1), x, sol.grid.y(j + 1)) *
                        sol.w.state(i, j + 1);
    for (int c = 0; c < m; ++c)
      out[c] = quad6(f[0][c], f[1][c], f[2][c], f[3][c], d0[c], d1[c], dy, wc);
  } else {
    const double y = sol.grid.y(j), dx = sol.grid.dx();
    StateVec g[4];
    for (int k = -1; k <= 2; ++k)
      g[k + 1] = model.flux_y(sol.u.state(i + k, j), sol.grid.x(i + k), y);
    const StateVec d0 = model.jacobian_y(sol.u.state(i, j), sol.grid.x(i), y) *
                        sol.v.state(i, j);
    const StateVec d1 = model.jacobian_y(sol.u.state(i + 1, j), sol.grid.x(i + 1), y) *
                        sol.v.state(i + 1, j);
    for (int c = 0; c < m; ++c)
      out[c] = quad6(g[0][c], g[1][c], g[2][c], g[3][c], d0[c], d1[c], dx, wc);
  }
  return out;
}

StateVec source_double_integral(const Solution2D& sol, const Model2D& model, int i, int j,
                                const WeightConfig& wc) {
  const int m = sol.components();
  const double dx = sol.grid.dx(), dy = sol.grid.dy();
  // inner x-integrals of s at rows j-1..j+2 and of s_y at rows j, j+1
  double sxi[4][kMaxComponents];  // S(y_{j+k})
  double syi[2][kMaxComponents];  // (S)_y at y_j, y_{j+1}
  for (int k = -1; k <= 2; ++k) {
    const int row = j + k;
    SourceEval2D se[4];
    for (int l = -1; l <= 2; ++l)
      se[l + 1] = model.source(sol.u.state(i + l, row), sol.grid.x(i + l), sol.grid.y(row),
                               sol.v.state(i + l, row), sol.w.state(i + l, row),
                               sol.z.state(i + l, row));
    for (int c = 0; c < m; ++c)
      sxi[k + 1][c] = quad6(se[0].s[c], se[1].s[c], se[2].s[c], se[3].s[c],
                            se[1].s_x[c], se[2].s_x[c], dx, wc);
    if (k == 0 || k == 1)
      for (int c = 0; c < m; ++c)
        syi[k][c] = quad6(se[0].s_y[c], se[1].s_y[c], se[2].s_y[c], se[3].s_y[c],
                          se[1].s_xy[c], se[2].s_xy[c], dx, wc);
  }
  StateVec out(m);
  for (int c = 0; c < m; ++c)
    out[c] = quad6(sxi[0][c], sxi[1][c], sxi[2][c], sxi[3][c], syi[0][c], syi[1][c], dy, wc);
  return out;
}

StateVec cell_total_residual(const Solution2D& sol, const Model2D& model, int i, int j,
                             const WeightConfig& wc) {
  using O = Edge::Orientation;
  StateVec phi = edge_flux_integral(sol, model, {O::vertical, i + 1, j}, wc) -
                 edge_flux_integral(sol, model, {O::vertical, i, j}, wc);
  phi += edge_flux_integral(sol, model, {O::horizontal, i, j + 1}, wc) -
         edge_flux_integral(sol, model, {O::horizontal, i, j}, wc);
  if (model.has_source()) phi -= source_double_integral(sol, model, i, j, wc);
  return phi;
}

std::array<double, 4> distribute_scalar_2d(double phi, double ubar, const Model2D& model,
                                           double delta, double x, double y) {
  StateVec ub{ubar};
  const double a = roe_alpha(model.eigensystem_x(ub, x, y).lambda[0], delta);
  const double b = roe_alpha(model.eigensystem_y(ub, x, y).lambda[0], delta);
  return {(1.0 - a) * (1.0 - b) * phi, a * (1.0 - b) * phi, (1.0 - a) * b * phi, a * b * phi};
}

std::array<StateVec, 4> dissipation_residuals(const std::array<StateVec, 4>& corners,
                                              double sigma, double dx, double dy) {
  const int m = corners[0].size();
  const double d = std::max(dx, dy);
  const double scale = 0.5 * sigma * d * d * d;
  std::array<StateVec, 4> out{StateVec(m), StateVec(m), StateVec(m), StateVec(m)};
  for (int c = 0; c < m; ++c) {
    const double u1 = corners[0][c], u2 = corners[1][c], u3 = corners[2][c], u4 = corners[3][c];
    out[0][c] = scale * ((u1 - u2) / dx + (u1 - u3) / dy);
    out[1][c] = scale * ((u2 - u1) / dx + (u2 - u4) / dy);
    out[2][c] = scale * ((u3 - u4) / dx + (u3 - u1) / dy);
    out[3][c] = scale * ((u4 - u3) / dx + (u4 - u2) / dy);
  }
  return out;
}

std::array<StateVec, 4> distribute_system_2d(const StateVec& phi, const StateVec& ubar,
                                             const Model2D& model, double delta, double x,
                                             double y) {
  const int m = phi.size();
  const EigenSystem ey = model.eigensystem_y(ubar, x, y);
  const StateVec psi = ey.left * phi;
  StateVec psi_dn(m), psi_up(m);
  for (int k = 0; k < m; ++k) {
    const double b = roe_alpha(ey.lambda[k], delta);
    psi_dn[k] = (1.0 - b) * psi[k];
    psi_up[k] = b * psi[k];
  }
  const StateVec phi_dn = ey.right * psi_dn;
  const StateVec phi_up = ey.right * psi_up;

  const EigenSystem ex = model.eigensystem_x(ubar, x, y);
  const StateVec pi_dn = ex.left * phi_dn;
  const StateVec pi_up = ex.left * phi_up;
  StateVec s1(m), s2(m), s3(m), s4(m);
  for (int k = 0; k < m; ++k) {
    const double a = roe_alpha(ex.lambda[k], delta);
    s1[k] = (1.0 - a) * pi_dn[k];
    s2[k] = a * pi_dn[k];
    s3[k] = (1.0 - a) * pi_up[k];
    s4[k] = a * pi_up[k];
  }
  return {ex.right * s1, ex.right * s2, ex.right * s3, ex.right * s4};
}

namespace detail {

void assemble_rhs_2d(const Solution2D& sol, const Model2D& model, const BoundaryPolicy2D& bc,
                     double sigma, double delta, const WeightConfig& wc, Workspace2D& ws,
                     Assembly2D& out) {
  const int nx = sol.grid.nx, ny = sol.grid.ny;
  const int m = sol.components();
  const double dx = sol.grid.dx(), dy = sol.grid.dy();
  const bool sourced = model.has_source();

  // --- node mask -------------------------------------------------------------
  const int nodes = (nx + 1) * (ny + 1);
  out.rhs.assign(static_cast<size_t>(nodes) * m, 0.0);
  out.updated.assign(nodes, 1);
  auto node = [nx](int i, int j) { return j * (nx + 1) + i; };
  if (bc.left == BoundaryKind::dirichlet)
    for (int j = 0; j <= ny; ++j) out.updated[node(0, j)] = 0;
  if (bc.right == BoundaryKind::dirichlet)
    for (int j = 0; j <= ny; ++j) out.updated[node(nx, j)] = 0;
  if (bc.bottom == BoundaryKind::dirichlet)
    for (int i = 0; i <= nx; ++i) out.updated[node(i, 0)] = 0;
  if (bc.top == BoundaryKind::dirichlet)
    for (int i = 0; i <= nx; ++i) out.updated[node(i, ny)] = 0;

  // --- node evaluations --------------------------------------------------------
  // fx on physical columns x all rows; gy on all columns x physical rows;
  // tangential flux derivatives on physical nodes; source on everything.
  const int rx = nx + 3, ry = ny + 3;  // strides including the ghost frame
  auto gidx = [rx, m](int i, int j, int c) {
    return (static_cast<size_t>(j + 1) * rx + (i + 1)) * m + c;
  };
  ws.fx.assign(static_cast<size_t>(rx) * ry * m, 0.0);
  ws.gy.assign(static_cast<size_t>(rx) * ry * m, 0.0);
  ws.dfy.assign(static_cast<size_t>(rx) * ry * m, 0.0);
  ws.dgx.assign(static_cast<size_t>(rx) * ry * m, 0.0);
  if (sourced) {
    ws.s.assign(static_cast<size_t>(rx) * ry * m, 0.0);
    ws.sx.assign(static_cast<size_t>(rx) * ry * m, 0.0);
    ws.sy.assign(static_cast<size_t>(rx) * ry * m, 0.0);
    ws.sxy.assign(static_cast<size_t>(rx) * ry * m, 0.0);
  }

  for (int j = -1; j <= ny + 1; ++j) {
    for (int i = -1; i <= nx + 1; ++i) {
      const bool ghost_col = (i < 0 || i > nx);
      const bool ghost_row = (j < 0 || j > ny);
      const double x = sol.grid.x(i), y = sol.grid.y(j);
      const StateVec u = sol.u.state(i, j);
      if (!ghost_col) {
        const StateVec f = model.flux_x(u, x, y);
        for (int c = 0; c < m; ++c) ws.fx[gidx(i, j, c)] = f[c];
      }
      if (!ghost_row) {
        const StateVec g = model.flux_y(u, x, y);
        for (int c = 0; c < m; ++c) ws.gy[gidx(i, j, c)] = g[c];
      }
      if (!ghost_col && !ghost_row) {
        const StateVec dfy = model.jacobian_x(u, x, y) * sol.w.state(i, j);
        const StateVec dgx = model.jacobian_y(u, x, y) * sol.v.state(i, j);
        for (int c = 0; c < m; ++c) {
          ws.dfy[gidx(i, j, c)] = dfy[c];
          ws.dgx[gidx(i, j, c)] = dgx[c];
        }
      }
      if (sourced) {
        const SourceEval2D se =
            model.source(u, x, y, sol.v.state(i, j), sol.w.state(i, j), sol.z.state(i, j));
        for (int c = 0; c < m; ++c) {
          ws.s[gidx(i, j, c)] = se.s[c];
          ws.sx[gidx(i, j, c)] = se.s_x[c];
          ws.sy[gidx(i, j, c)] = se.s_y[c];
          ws.sxy[gidx(i, j, c)] = se.s_xy[c];
        }
      }
    }
  }

  // --- edge flux integrals ------------------------------------------------------
  // vertical edges: (nx+1) columns x ny rows; horizontal: nx columns x (ny+1) rows
  ws.ve.assign(static_cast<size_t>(nx + 1) * ny * m, 0.0);
  ws.he.assign(static_cast<size_t>(nx) * (ny + 1) * m, 0.0);
  auto ve_idx = [nx, m](int i, int j, int c) {
    return (static_cast<size_t>(j) * (nx + 1) + i) * m + c;
  };
  auto he_idx = [nx, m](int i, int j, int c) {
    return (static_cast<size_t>(j) * nx + i) * m + c;
  };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i)
      for (int c = 0; c < m; ++c)
        ws.ve[ve_idx(i, j, c)] =
            quad6(ws.fx[gidx(i, j - 1, c)], ws.fx[gidx(i, j, c)], ws.fx[gidx(i, j + 1, c)],
                  ws.fx[gidx(i, j + 2, c)], ws.dfy[gidx(i, j, c)], ws.dfy[gidx(i, j + 1, c)],
                  dy, wc);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i)
      for (int c = 0; c < m; ++c)
        ws.he[he_idx(i, j, c)] =
            quad6(ws.gy[gidx(i - 1, j, c)], ws.gy[gidx(i, j, c)], ws.gy[gidx(i + 1, j, c)],
                  ws.gy[gidx(i + 2, j, c)], ws.dgx[gidx(i, j, c)], ws.dgx[gidx(i + 1, j, c)],
                  dx, wc);

  // --- source quadrature ----------------------------------------------------------
  // inner x-integrals per (cell column, row): s over all rows, s_y over
  // physical rows (the outer derivative endpoints)
  if (sourced) {
    ws.sxi.assign(static_cast<size_t>(nx) * ry * m, 0.0);
    ws.syi.assign(static_cast<size_t>(nx) * (ny + 1) * m, 0.0);
  }
  auto sxi_idx = [nx, m](int i, int j, int c) {
    return (static_cast<size_t>(j + 1) * nx + i) * m + c;
  };
  auto syi_idx = [nx, m](int i, int j, int c) {
    return (static_cast<size_t>(j) * nx + i) * m + c;
  };
  if (sourced) {
    for (int j = -1; j <= ny + 1; ++j)
      for (int i = 0; i < nx; ++i)
        for (int c = 0; c < m; ++c)
          ws.sxi[sxi_idx(i, j, c)] =
              quad6(ws.s[gidx(i - 1, j, c)], ws.s[gidx(i, j, c)], ws.s[gidx(i + 1, j, c)],
                    ws.s[gidx(i + 2, j, c)], ws.sx[gidx(i, j, c)], ws.sx[gidx(i + 1, j, c)],
                    dx, wc);
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i < nx; ++i)
        for (int c = 0; c < m; ++c)
          ws.syi[syi_idx(i, j, c)] =
              quad6(ws.sy[gidx(i - 1, j, c)], ws.sy[gidx(i, j, c)], ws.sy[gidx(i + 1, j, c)],
                    ws.sy[gidx(i + 2, j, c)], ws.sxy[gidx(i, j, c)], ws.sxy[gidx(i + 1, j, c)],
                    dx, wc);
  }

  // --- per-cell residual, distribution, gather ----------------------------------
  const double inv_c = 1.0 / (dx * dy);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      StateVec phi(m);
      for (int c = 0; c < m; ++c) {
        double p = ws.ve[ve_idx(i + 1, j, c)] - ws.ve[ve_idx(i, j, c)] +
                   ws.he[he_idx(i, j + 1, c)] - ws.he[he_idx(i, j, c)];
        if (sourced)
          p -= quad6(ws.sxi[sxi_idx(i, j - 1, c)], ws.sxi[sxi_idx(i, j, c)],
                     ws.sxi[sxi_idx(i, j + 1, c)], ws.sxi[sxi_idx(i, j + 2, c)],
                     ws.syi[syi_idx(i, j, c)], ws.syi[syi_idx(i, j + 1, c)], dy, wc);
        phi[c] = p;
      }
      const std::array<StateVec, 4> corners{sol.u.state(i, j), sol.u.state(i + 1, j),
                                            sol.u.state(i, j + 1), sol.u.state(i + 1, j + 1)};
      const StateVec ubar = average_state_2d(corners);
      const double xc = sol.grid.x(i) + 0.5 * dx;
      const double yc = sol.grid.y(j) + 0.5 * dy;

      std::array<StateVec, 4> parts;
      if (m == 1) {
        const auto p = distribute_scalar_2d(phi[0], ubar[0], model, delta, xc, yc);
        for (int k = 0; k < 4; ++k) parts[k] = StateVec{p[k]};
      } else {
        parts = distribute_system_2d(phi, ubar, model, delta, xc, yc);
      }
      if (sigma > 0.0) {
        const auto diss = dissipation_residuals(corners, sigma, dx, dy);
        for (int k = 0; k < 4; ++k) parts[k] += diss[k];
      }

      const int verts[4][2] = {{i, j}, {i + 1, j}, {i, j + 1}, {i + 1, j + 1}};
      for (int k = 0; k < 4; ++k) {
        const int nid = node(verts[k][0], verts[k][1]);
        if (!out.updated[nid]) continue;
        for (int c = 0; c < m; ++c)
          out.rhs[static_cast<size_t>(nid) * m + c] += parts[k][c] * inv_c;
      }
    }
  }

  // Wall nodes gather from the mirror-image cells as well: reflection maps
  // the image-cell parts onto the real-cell parts with odd components
  // negated, so the even components double and the normal momentum receives
  // exactly zero (and stays at its initial wall value).
  if (bc.bottom == BoundaryKind::wall) {
    for (int i = 0; i <= nx; ++i) {
      const int nid = node(i, 0);
      if (!out.updated[nid]) continue;
      for (int c = 0; c < m; ++c)
        out.rhs[static_cast<size_t>(nid) * m + c] =
            bc.wall_odd[c] ? 0.0 : 2.0 * out.rhs[static_cast<size_t>(nid) * m + c];
    }
  }

  // L1 residue over the gathered residual sums (not divided by |C_ij|)
  double acc = 0.0;
  int count = 0;
  for (int nid = 0; nid < nodes; ++nid) {
    if (!out.updated[nid]) continue;
    double a = 0.0;
    for (int c = 0; c < m; ++c) a += std::abs(out.rhs[static_cast<size_t>(nid) * m + c]);
    acc += a * dx * dy;
    ++count;
  }
  out.residue = acc / count;
}

void apply_update_2d(Solution2D& sol, const Assembly2D& a, double dt,
                     std::vector<double>* carry) {
  const int nx = sol.grid.nx, ny = sol.grid.ny;
  const int m = sol.components();
  if (carry && carry->size() != a.rhs.size()) carry->assign(a.rhs.size(), 0.0);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const int nid = j * (nx + 1) + i;
      if (!a.updated[nid]) continue;
      for (int c = 0; c < m; ++c) {
        const size_t k = static_cast<size_t>(nid) * m + c;
        if (!carry) {
          sol.u.at(i, j, c) -= dt * a.rhs[k];
          continue;
        }
        const double d = (*carry)[k] - dt * a.rhs[k];
        const double u0 = sol.u.at(i, j, c);
        const double y = u0 + d;
        (*carry)[k] = (std::abs(u0) >= std::abs(d)) ? (u0 - y) + d : (d - y) + u0;
        sol.u.at(i, j, c) = y;
      }
    }
}

}  // namespace detail

double euler_step_2d(Solution2D& sol, const Model2D& model, const BoundaryPolicy2D& bc,
                     double dt, double sigma, double delta, const WeightConfig& wc) {
  if (!(dt > 0.0)) throw std::invalid_argument("euler_step_2d: dt must be positive");
  detail::Workspace2D ws;
  detail::Assembly2D a;
  detail::assemble_rhs_2d(sol, model, bc, sigma, delta, wc, ws, a);
  detail::apply_update_2d(sol, a, dt);
  if (!sol.u.finite_interior()) throw DivergenceError("euler_step_2d: non-finite update", -1);
  return a.residue;
}

double l1_residue_2d(const Solution2D& sol, const Model2D& model, const BoundaryPolicy2D& bc,
                     double sigma, double delta, const WeightConfig& wc) {
  detail::Workspace2D ws;
  detail::Assembly2D a;
  detail::assemble_rhs_2d(sol, model, bc, sigma, delta, wc, ws, a);
  return a.residue;
}

namespace {

/// One-sided or analytic derivative for a boundary node of a sweep along
/// the `horizontal` (x) or vertical (y) direction.
enum class SweepSide { low, high };

}  // namespace

void derivative_sweep_2d(Solution2D& sol, const BoundaryPolicy2D& bc, const WeightConfig& wc) {
  const int nx = sol.grid.nx, ny = sol.grid.ny;
  const int m = sol.components();
  const double dx = sol.grid.dx(), dy = sol.grid.dy();

  std::vector<double> buf(static_cast<size_t>(nx + 1) * (ny + 1) * m);
  auto bidx = [nx, m](int i, int j, int c) {
    return (static_cast<size_t>(j) * (nx + 1) + i) * m + c;
  };

  // Dirichlet edges with a closed form for the requested derivative override
  // the swept values on their whole edge (corners included).
  auto apply_edge_closures = [&](const std::function<StateVec(double, double)> BoundaryData2D::*member) {
    auto apply = [&](BoundaryKind kind, const BoundaryData2D& data, bool horizontal, int pos) {
      if (kind != BoundaryKind::dirichlet || !(data.*member)) return;
      const int tmax = horizontal ? nx : ny;
      for (int t = 0; t <= tmax; ++t) {
        const int i = horizontal ? t : pos;
        const int j = horizontal ? pos : t;
        const StateVec d = (data.*member)(sol.grid.x(i), sol.grid.y(j));
        for (int c = 0; c < m; ++c) buf[bidx(i, j, c)] = d[c];
      }
    };
    apply(bc.left, bc.left_data, false, 0);
    apply(bc.right, bc.right_data, false, nx);
    apply(bc.bottom, bc.bottom_data, true, 0);
    apply(bc.top, bc.top_data, true, ny);
  };

  // --- v: x-direction row sweeps ------------------------------------------------
  for (int j = 0; j <= ny; ++j) {
    for (int i = 1; i < nx; ++i)
      for (int c = 0; c < m; ++c)
        buf[bidx(i, j, c)] = hweno4_derivative(
            {{sol.u.at(i - 1, j, c), sol.u.at(i, j, c), sol.u.at(i + 1, j, c)},
             {sol.v.at(i - 1, j, c), sol.v.at(i + 1, j, c)},
             dx},
            wc);
    auto v_boundary = [&](int i, int dir, BoundaryKind kind, const BoundaryData2D& data) {
      if (kind == BoundaryKind::dirichlet && data.d_dx) {
        const StateVec d = data.d_dx(sol.grid.x(i), sol.grid.y(j));
        for (int c = 0; c < m; ++c) buf[bidx(i, j, c)] = d[c];
        return;
      }
      for (int c = 0; c < m; ++c)
        buf[bidx(i, j, c)] = dir * one_sided_derivative4(
                                       sol.u.at(i + 4 * dir, j, c), sol.u.at(i + 3 * dir, j, c),
                                       sol.u.at(i + 2 * dir, j, c), sol.u.at(i + dir, j, c),
                                       sol.u.at(i, j, c), dx);
    };
    v_boundary(0, 1, bc.left, bc.left_data);
    v_boundary(nx, -1, bc.right, bc.right_data);
  }
  apply_edge_closures(&BoundaryData2D::d_dx);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      for (int c = 0; c < m; ++c) sol.v.at(i, j, c) = buf[bidx(i, j, c)];
  refresh_ghost_v_2d(sol, bc);

  // --- w: y-direction column sweeps ---------------------------------------------
  for (int i = 0; i <= nx; ++i) {
    for (int j = 1; j < ny; ++j)
      for (int c = 0; c < m; ++c)
        buf[bidx(i, j, c)] = hweno4_derivative(
            {{sol.u.at(i, j - 1, c), sol.u.at(i, j, c), sol.u.at(i, j + 1, c)},
             {sol.w.at(i, j - 1, c), sol.w.at(i, j + 1, c)},
             dy},
            wc);
    auto w_boundary = [&](int j, int dir, BoundaryKind kind, const BoundaryData2D& data) {
      if (kind == BoundaryKind::dirichlet && data.d_dy) {
        const StateVec d = data.d_dy(sol.grid.x(i), sol.grid.y(j));
        for (int c = 0; c < m; ++c) buf[bidx(i, j, c)] = d[c];
        return;
      }
      if (kind == BoundaryKind::wall) {
        // mirror ghosts are in place; the interior formula applies at the wall
        for (int c = 0; c < m; ++c)
          buf[bidx(i, j, c)] = hweno4_derivative(
              {{sol.u.at(i, j - 1, c), sol.u.at(i, j, c), sol.u.at(i, j + 1, c)},
               {sol.w.at(i, j - 1, c), sol.w.at(i, j + 1, c)},
               dy},
              wc);
        return;
      }
      for (int c = 0; c < m; ++c)
        buf[bidx(i, j, c)] = dir * one_sided_derivative4(
                                       sol.u.at(i, j + 4 * dir, c), sol.u.at(i, j + 3 * dir, c),
                                       sol.u.at(i, j + 2 * dir, c), sol.u.at(i, j + dir, c),
                                       sol.u.at(i, j, c), dy);
    };
    w_boundary(0, 1, bc.bottom, bc.bottom_data);
    w_boundary(ny, -1, bc.top, bc.top_data);
  }
  apply_edge_closures(&BoundaryData2D::d_dy);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      for (int c = 0; c < m; ++c) sol.w.at(i, j, c) = buf[bidx(i, j, c)];

  // --- z: y-direction column sweeps of the fresh v with z_old Hermite data -------
  for (int i = 0; i <= nx; ++i) {
    for (int j = 1; j < ny; ++j)
      for (int c = 0; c < m; ++c)
        buf[bidx(i, j, c)] = hweno4_derivative(
            {{sol.v.at(i, j - 1, c), sol.v.at(i, j, c), sol.v.at(i, j + 1, c)},
             {sol.z.at(i, j - 1, c), sol.z.at(i, j + 1, c)},
             dy},
            wc);
    auto z_boundary = [&](int j, int dir, BoundaryKind kind, const BoundaryData2D& data) {
      if (kind == BoundaryKind::dirichlet && data.d_dxy) {
        const StateVec d = data.d_dxy(sol.grid.x(i), sol.grid.y(j));
        for (int c = 0; c < m; ++c) buf[bidx(i, j, c)] = d[c];
        return;
      }
      if (kind == BoundaryKind::wall) {
        for (int c = 0; c < m; ++c)
          buf[bidx(i, j, c)] = hweno4_derivative(
              {{sol.v.at(i, j - 1, c), sol.v.at(i, j, c), sol.v.at(i, j + 1, c)},
               {sol.z.at(i, j - 1, c), sol.z.at(i, j + 1, c)},
               dy},
              wc);
        return;
      }
      for (int c = 0; c < m; ++c)
        buf[bidx(i, j, c)] = dir * one_sided_derivative4(
                                       sol.v.at(i, j + 4 * dir, c), sol.v.at(i, j + 3 * dir, c),
                                       sol.v.at(i, j + 2 * dir, c), sol.v.at(i, j + dir, c),
                                       sol.v.at(i, j, c), dy);
    };
    z_boundary(0, 1, bc.bottom, bc.bottom_data);
    z_boundary(ny, -1, bc.top, bc.top_data);
  }
  apply_edge_closures(&BoundaryData2D::d_dxy);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      for (int c = 0; c < m; ++c) sol.z.at(i, j, c) = buf[bidx(i, j, c)];

  refresh_ghost_wz_2d(sol, bc);
}

}  // namespace rdh
