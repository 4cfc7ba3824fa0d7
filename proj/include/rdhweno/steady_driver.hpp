#pragma once

/// Pseudo-time iteration to steady state: per-iteration dt from the CFL
/// bound, residue monitoring, and the stopping logic (round-off tolerance,
/// stagnation window, iteration cap, divergence detection).

#include "rdhweno/grid.hpp"
#include "rdhweno/model.hpp"
#include "rdhweno/boundary.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rdh {

struct RunConfig {
  std::string problem;
  int n = 0;                      // cells (0 = problem default)
  int m = 0;                      // 2D cells in y (0 = problem default / match n)
  double cfl = -1.0;              // negative = problem default
  double sigma = -1.0;
  double delta = -1.0;
  double epsilon = -1.0;
  double residue_tol = -1.0;
  long max_iters = -1;
  int stagnation_window = -1;
  std::string out_dir;
};

enum class Termination { converged, stagnated, max_iters, diverged };

const char* to_string(Termination t);

struct RunReport {
  std::string problem;
  long iterations = 0;
  std::vector<std::pair<long, double>> residue_history;
  Termination reason = Termination::converged;
  double wall_seconds = 0.0;
  long diverged_iteration = -1;
  std::string diagnostic;
  std::optional<Solution1D> sol1;
  std::optional<Solution2D> sol2;

  double initial_residue() const { return residue_history.front().second; }
  double final_residue() const { return residue_history.back().second; }
};

/// Largest wave speed over the physical nodes; throws DivergenceError on a
/// non-finite speed. 1D: cfl dx / max|lambda|. 2D: cfl / (sx/dx + sy/dy).
double compute_dt_1d(const Solution1D& sol, const Model1D& model, double cfl);
double compute_dt_2d(const Solution2D& sol, const Model2D& model, double cfl);

/// Runs the registered problem to steady state. Stops when the residue
/// falls under residue_tol * (1 + initial residue), when the best residue
/// has not improved by 0.1% over the stagnation window, or at the iteration
/// cap; a non-finite field or unphysical model state terminates the run as
/// diverged.
RunReport run_to_steady(const RunConfig& cfg);

}  // namespace rdh
