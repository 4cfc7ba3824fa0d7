#pragma once

/// 2D residual evaluation and distribution (Procedures III and IV): cell
/// residuals from HWENO6 edge flux integrals and dimension-by-dimension
/// source quadrature, four-vertex upwind distribution (y-then-x
/// characteristic splitting for systems), zero-sum dissipation residuals,
/// nodal forward-Euler update, and the v/w/z derivative sweeps.

#include "rdhweno/boundary.hpp"
#include "rdhweno/grid.hpp"
#include "rdhweno/model.hpp"
#include "rdhweno/stencil_kernels.hpp"

#include <array>
#include <vector>

namespace rdh {

/// Four-part split of one cell's total residual. Vertex order is fixed as
/// M1=(x_i,y_j), M2=(x_{i+1},y_j), M3=(x_i,y_{j+1}), M4=(x_{i+1},y_{j+1});
/// parts sum to phi before dissipation, the dissipation parts sum to zero.
struct CellResidual {
  StateVec phi;
  std::array<StateVec, 4> parts;
  std::array<StateVec, 4> diss;
};

struct Edge {
  enum class Orientation { vertical, horizontal };
  Orientation orientation;
  int i, j;  // vertical: nodes (i,j)-(i,j+1); horizontal: nodes (i,j)-(i+1,j)
};

/// HWENO6 line integral of the normal flux over one cell edge, e.g. for a
/// vertical edge the integral of f(u(x_i, y)) over [y_j, y_{j+1}] with the
/// tangential flux derivatives jacobian_x(u) * w at the edge endpoints.
StateVec edge_flux_integral(const Solution2D& sol, const Model2D& model, const Edge& edge,
                            const WeightConfig& wc = {});

/// Dimension-by-dimension HWENO6 double integral of the source over cell
/// (i, j): inner x-integrals of s (and of s_y) per row feed an outer
/// y-integration.
StateVec source_double_integral(const Solution2D& sol, const Model2D& model, int i, int j,
                                const WeightConfig& wc = {});

/// Total residual of cell (i, j): right/left f-integrals plus top/bottom
/// g-integrals minus the source double integral.
StateVec cell_total_residual(const Solution2D& sol, const Model2D& model, int i, int j,
                             const WeightConfig& wc = {});

/// Scalar four-part upwind split with alpha from f'(ubar), beta from g'(ubar).
std::array<double, 4> distribute_scalar_2d(double phi, double ubar, const Model2D& model,
                                           double delta, double x, double y);

/// Zero-sum dissipation residuals from the four corner states
/// (SW, SE, NW, NE), scaled by sigma/2 * max(dx,dy)^3.
std::array<StateVec, 4> dissipation_residuals(const std::array<StateVec, 4>& corners,
                                              double sigma, double dx, double dy);

/// Characteristic four-part split: project with the y-eigenvectors at the
/// average state, split up/down, project back, then split each part
/// left/right through the x-eigensystem.
std::array<StateVec, 4> distribute_system_2d(const StateVec& phi, const StateVec& ubar,
                                             const Model2D& model, double delta, double x,
                                             double y);

/// One forward-Euler pseudo-time update of u over all non-Dirichlet nodes;
/// node (i,j) gathers part 1 of cell (i,j), part 2 of (i-1,j), part 3 of
/// (i,j-1) and part 4 of (i-1,j-1), dissipation included. Returns the
/// pre-update L1 residue.
double euler_step_2d(Solution2D& sol, const Model2D& model, const BoundaryPolicy2D& bc,
                     double dt, double sigma, double delta, const WeightConfig& wc = {});

double l1_residue_2d(const Solution2D& sol, const Model2D& model, const BoundaryPolicy2D& bc,
                     double sigma, double delta, const WeightConfig& wc = {});

/// Rebuild the derivative fields from the updated point values: v by HWENO4
/// row sweeps on (u, v_old), w by column sweeps on (u, w_old), then z by
/// column sweeps applied to the fresh v with z_old as Hermite data. Ghost
/// derivatives are refreshed internally.
void derivative_sweep_2d(Solution2D& sol, const BoundaryPolicy2D& bc,
                         const WeightConfig& wc = {});

namespace detail {

struct Assembly2D {
  std::vector<double> rhs;  // (nx+1)*(ny+1)*m, divided by |C_ij|
  std::vector<char> updated;
  double residue = 0.0;
};

/// Scratch arrays reused across iterations.
struct Workspace2D {
  std::vector<double> fx, gy, dfy, dgx;
  std::vector<double> s, sx, sy, sxy;
  std::vector<double> ve, he, sxi, syi;
};

void assemble_rhs_2d(const Solution2D& sol, const Model2D& model, const BoundaryPolicy2D& bc,
                     double sigma, double delta, const WeightConfig& wc, Workspace2D& ws,
                     Assembly2D& out);

/// Applies u -= dt * rhs, optionally with compensated accumulation of the
/// increments (see apply_update_1d).
void apply_update_2d(Solution2D& sol, const Assembly2D& a, double dt,
                     std::vector<double>* carry = nullptr);

}  // namespace detail

}  // namespace rdh
