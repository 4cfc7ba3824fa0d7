#pragma once

/// Boundary policies. One ghost node per side is enough for every stencil in
/// the scheme; ghosts are refreshed after each pseudo-time update.
///
///   * dirichlet: boundary node held at the prescribed value; ghost filled
///     from the prescribed closed form (which extends smoothly outside the
///     domain for every registered problem). Derivative fields come from the
///     prescribed derivative closures when available, else from one-sided
///     differences of the current solution.
///   * outflow: ghost values by degree-4 polynomial extrapolation; the
///     boundary node is updated with the one-sided residual it receives.
///   * wall (2D bottom edge): mirror ghosts with the normal-momentum
///     component negated; derivative fields mirrored with the parities
///     implied by the reflection symmetry.

#include "rdhweno/core_types.hpp"
#include "rdhweno/grid.hpp"

#include <array>
#include <functional>

namespace rdh {

enum class BoundaryKind { dirichlet, outflow, wall };

/// Closed-form boundary data. `value` is required for dirichlet sides;
/// derivative closures are optional (null -> one-sided numeric fallback).
struct BoundaryData1D {
  std::function<StateVec(double x)> value;
  std::function<StateVec(double x)> derivative;
};

struct BoundaryPolicy1D {
  BoundaryKind left = BoundaryKind::dirichlet;
  BoundaryKind right = BoundaryKind::dirichlet;
  BoundaryData1D left_data;
  BoundaryData1D right_data;
};

/// Degree-4 extrapolation one node beyond the last of five equispaced values.
inline double extrapolate4(double u0, double u1, double u2, double u3, double u4) {
  // fifth forward difference of the degree-4 interpolant vanishes
  return 5.0 * u4 - 10.0 * u3 + 10.0 * u2 - 5.0 * u1 + u0;
}

/// Fourth-order one-sided first derivative at the last of five values.
inline double one_sided_derivative4(double u0, double u1, double u2, double u3, double u4,
                                    double dx) {
  return (25.0 * u4 - 48.0 * u3 + 36.0 * u2 - 16.0 * u1 + 3.0 * u0) / (12.0 * dx);
}

/// Closed-form boundary data for a 2D edge.
struct BoundaryData2D {
  std::function<StateVec(double x, double y)> value;
  std::function<StateVec(double x, double y)> d_dx;   // u_x
  std::function<StateVec(double x, double y)> d_dy;   // u_y
  std::function<StateVec(double x, double y)> d_dxy;  // u_xy
};

struct BoundaryPolicy2D {
  BoundaryKind left = BoundaryKind::dirichlet;
  BoundaryKind right = BoundaryKind::dirichlet;
  BoundaryKind bottom = BoundaryKind::dirichlet;
  BoundaryKind top = BoundaryKind::dirichlet;
  BoundaryData2D left_data, right_data, bottom_data, top_data;
  /// Components odd under reflection at a wall (normal momentum).
  std::array<bool, kMaxComponents> wall_odd{};
};

void refresh_ghosts_1d(Solution1D& sol, const BoundaryPolicy1D& bc);

/// Refreshes ghost values of `u`; called right after the pseudo-time update.
void refresh_ghost_values_2d(Solution2D& sol, const BoundaryPolicy2D& bc);
/// Refreshes ghost v after the v-sweep (the z-sweep reads ghost v).
void refresh_ghost_v_2d(Solution2D& sol, const BoundaryPolicy2D& bc);
/// Refreshes ghost w and z after the remaining sweeps.
void refresh_ghost_wz_2d(Solution2D& sol, const BoundaryPolicy2D& bc);

}  // namespace rdh
