#include "rdhweno/steady_driver.hpp"

#include "rdhweno/problems.hpp"
#include "rdhweno/rd_core_1d.hpp"
#include "rdhweno/rd_core_2d.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdh {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::stagnated: return "stagnated";
    case Termination::max_iters: return "max_iters";
    case Termination::diverged: return "diverged";
  }
  return "?";
}

double compute_dt_1d(const Solution1D& sol, const Model1D& model, double cfl) {
  double speed = 0.0;
  for (int i = 0; i <= sol.grid.cells; ++i) {
    const EigenSystem es = model.eigensystem(sol.u.state(i));
    for (int k = 0; k < sol.components(); ++k) speed = std::max(speed, std::abs(es.lambda[k]));
  }
  if (!std::isfinite(speed)) throw DivergenceError("compute_dt: non-finite wave speed", -1);
  return cfl * sol.grid.dx() / std::max(speed, 1e-300);
}

double compute_dt_2d(const Solution2D& sol, const Model2D& model, double cfl) {
  double sx = 0.0, sy = 0.0;
  for (int j = 0; j <= sol.grid.ny; ++j)
    for (int i = 0; i <= sol.grid.nx; ++i) {
      const StateVec u = sol.u.state(i, j);
      const double x = sol.grid.x(i), y = sol.grid.y(j);
      const EigenSystem ex = model.eigensystem_x(u, x, y);
      const EigenSystem ey = model.eigensystem_y(u, x, y);
      for (int k = 0; k < sol.components(); ++k) {
        sx = std::max(sx, std::abs(ex.lambda[k]));
        sy = std::max(sy, std::abs(ey.lambda[k]));
      }
    }
  if (!std::isfinite(sx) || !std::isfinite(sy))
    throw DivergenceError("compute_dt: non-finite wave speed", -1);
  return cfl / std::max(sx / sol.grid.dx() + sy / sol.grid.dy(), 1e-300);
}

namespace {

struct ResolvedConfig {
  int n, m;
  double cfl, sigma, delta, epsilon, residue_tol;
  long max_iters;
  int stagnation_window;
};

ResolvedConfig resolve(const RunConfig& cfg, const ProblemSpec& spec) {
  const ProblemDefaults& d = spec.defaults;
  ResolvedConfig r;
  r.n = cfg.n > 0 ? cfg.n : d.n;
  r.m = cfg.m > 0 ? cfg.m : (d.m > 0 ? d.m : r.n);
  r.cfl = cfg.cfl > 0 ? cfg.cfl : d.cfl;
  r.sigma = cfg.sigma >= 0 ? cfg.sigma : d.sigma;
  r.delta = cfg.delta > 0 ? cfg.delta : d.delta;
  r.epsilon = cfg.epsilon > 0 ? cfg.epsilon : d.epsilon;
  r.residue_tol = cfg.residue_tol > 0 ? cfg.residue_tol : d.residue_tol;
  r.max_iters = cfg.max_iters >= 0 ? cfg.max_iters : d.max_iters;
  r.stagnation_window = cfg.stagnation_window > 0 ? cfg.stagnation_window : d.stagnation_window;
  if (r.n < 8 || (spec.dimension == 2 && r.m < 8))
    throw std::invalid_argument("grid too small: at least 8 cells per direction");
  if (!(r.cfl > 0) || !(r.residue_tol > 0) || !(r.delta > 0) || !(r.epsilon > 0))
    throw std::invalid_argument("cfl, tolerances, delta and epsilon must be positive");
  return r;
}

/// Thinning residue recorder: keeps every k-th entry, doubling k whenever
/// the buffer reaches 10^5 entries.
class ResidueHistory {
 public:
  void record(long iter, double residue) {
    if (iter % stride_ == 0) entries_.push_back({iter, residue});
    if (entries_.size() >= 100000) {
      std::vector<std::pair<long, double>> kept;
      kept.reserve(entries_.size() / 2 + 1);
      for (size_t k = 0; k < entries_.size(); k += 2) kept.push_back(entries_[k]);
      entries_ = std::move(kept);
      stride_ *= 2;
    }
  }
  /// The stopping checks always need the latest value recorded.
  void force(long iter, double residue) {
    if (entries_.empty() || entries_.back().first != iter) entries_.push_back({iter, residue});
  }
  std::vector<std::pair<long, double>> take() { return std::move(entries_); }

 private:
  std::vector<std::pair<long, double>> entries_;
  long stride_ = 1;
};

}  // namespace

RunReport run_to_steady(const RunConfig& cfg) {
  const ProblemSpec& spec = find_problem(cfg.problem);
  const ResolvedConfig rc = resolve(cfg, spec);
  const WeightConfig wc{rc.epsilon};

  RunReport report;
  report.problem = spec.id;
  const auto t_start = std::chrono::steady_clock::now();

  ResidueHistory history;
  double initial_residue = -1.0;
  double best = std::numeric_limits<double>::infinity();
  long best_iter = 0;
  long it = 0;

  try {
    if (spec.dimension == 1) {
      const Problem1D& pb = *spec.p1;
      Solution1D sol({pb.x0, pb.x1, rc.n}, pb.model->components());
      for (int i = -1; i <= rc.n + 1; ++i) {
        sol.u.set_state(i, pb.initial_u(sol.grid.x(i)));
        sol.v.set_state(i, pb.initial_v(sol.grid.x(i)));
      }
      refresh_ghosts_1d(sol, pb.bc);

      detail::Assembly1D a;
      std::vector<double> carry;
      while (true) {
        detail::assemble_rhs_1d(sol, *pb.model, pb.bc, rc.delta, wc, a);
        history.record(it, a.residue);
        if (initial_residue < 0) initial_residue = a.residue;
        if (a.residue < rc.residue_tol * (1.0 + initial_residue)) {
          history.force(it, a.residue);
          report.reason = Termination::converged;
          break;
        }
        if (a.residue < best * (1.0 - 1e-3)) {
          best = a.residue;
          best_iter = it;
        }
        if (it - best_iter > rc.stagnation_window) {
          history.force(it, a.residue);
          report.reason = Termination::stagnated;
          break;
        }
        if (it >= rc.max_iters) {
          history.force(it, a.residue);
          report.reason = Termination::max_iters;
          break;
        }
        const double dt = compute_dt_1d(sol, *pb.model, rc.cfl);
        detail::apply_update_1d(sol, a, dt, &carry);
        if (!sol.u.finite_interior(rc.n))
          throw DivergenceError("non-finite field after update", it);
        refresh_ghosts_1d(sol, pb.bc);
        derivative_sweep_1d(sol, pb.bc, wc);
        ++it;
      }
      report.sol1 = std::move(sol);
    } else {
      const Problem2D& pb = *spec.p2;
      Solution2D sol({pb.x0, pb.x1, pb.y0, pb.y1, rc.n, rc.m}, pb.model->components());
      for (int j = -1; j <= rc.m + 1; ++j)
        for (int i = -1; i <= rc.n + 1; ++i) {
          const double x = sol.grid.x(i), y = sol.grid.y(j);
          sol.u.set_state(i, j, pb.initial_u(x, y));
          sol.v.set_state(i, j, pb.initial_v(x, y));
          sol.w.set_state(i, j, pb.initial_w(x, y));
          sol.z.set_state(i, j, pb.initial_z(x, y));
        }
      refresh_ghost_values_2d(sol, pb.bc);
      refresh_ghost_v_2d(sol, pb.bc);
      refresh_ghost_wz_2d(sol, pb.bc);

      detail::Workspace2D ws;
      detail::Assembly2D a;
      std::vector<double> carry;
      while (true) {
        detail::assemble_rhs_2d(sol, *pb.model, pb.bc, rc.sigma, rc.delta, wc, ws, a);
        history.record(it, a.residue);
        if (initial_residue < 0) initial_residue = a.residue;
        if (a.residue < rc.residue_tol * (1.0 + initial_residue)) {
          history.force(it, a.residue);
          report.reason = Termination::converged;
          break;
        }
        if (a.residue < best * (1.0 - 1e-3)) {
          best = a.residue;
          best_iter = it;
        }
        if (it - best_iter > rc.stagnation_window) {
          history.force(it, a.residue);
          report.reason = Termination::stagnated;
          break;
        }
        if (it >= rc.max_iters) {
          history.force(it, a.residue);
          report.reason = Termination::max_iters;
          break;
        }
        const double dt = compute_dt_2d(sol, *pb.model, rc.cfl);
        detail::apply_update_2d(sol, a, dt, &carry);
        if (!sol.u.finite_interior())
          throw DivergenceError("non-finite field after update", it);
        refresh_ghost_values_2d(sol, pb.bc);
        derivative_sweep_2d(sol, pb.bc, wc);
        ++it;
      }
      report.sol2 = std::move(sol);
    }
  } catch (const DivergenceError& e) {
    report.reason = Termination::diverged;
    report.diverged_iteration = e.iteration >= 0 ? e.iteration : it;
    report.diagnostic = e.what();
  } catch (const UnphysicalStateError& e) {
    report.reason = Termination::diverged;
    report.diverged_iteration = it;
    report.diagnostic = e.what();
  }

  report.iterations = it;
  report.residue_history = history.take();
  if (report.residue_history.empty()) report.residue_history.push_back({0, NAN});
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

}  // namespace rdh
