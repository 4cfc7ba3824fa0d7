#pragma once

/// Discrete error norms against exact solutions, observed convergence
/// orders, and the grid-refinement study harness.

#include "rdhweno/problems.hpp"
#include "rdhweno/steady_driver.hpp"

#include <string>
#include <vector>

namespace rdh {

struct ErrorNorms {
  double l1 = 0.0;   // mean |e| over masked nodes
  double l2 = 0.0;   // root mean square
  double linf = 0.0; // max
};

/// Norms of (numeric - exact) for one component over masked nodes; rejects
/// an empty mask.
ErrorNorms error_norms_1d(const Solution1D& sol, const std::function<StateVec(double)>& exact,
                          const std::function<bool(double)>& mask, int component);
ErrorNorms error_norms_2d(const Solution2D& sol,
                          const std::function<StateVec(double, double)>& exact, int component);

/// log2(e_coarse / e_fine) for a refinement factor of 2; NaN marks an
/// undefined order (non-positive error).
double observed_order(double e_coarse, double e_fine);

struct ErrorTableRow {
  int n = 0, m = 0;
  ErrorNorms e;
  double l1_order = NAN, l2_order = NAN, linf_order = NAN;
  bool ok = false;
  std::string failure;
  Termination reason = Termination::converged;
  long iterations = 0;
};

/// Runs the problem on each grid and tabulates errors and observed orders.
/// Row failures (divergence, config errors) are recorded, not thrown.
std::vector<ErrorTableRow> convergence_study(const std::string& problem,
                                             const std::vector<int>& grids,
                                             const RunConfig& overrides = {});

}  // namespace rdh
