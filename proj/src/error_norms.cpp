#include "rdhweno/error_norms.hpp"

#include <cmath>
#include <stdexcept>

namespace rdh {

ErrorNorms error_norms_1d(const Solution1D& sol, const std::function<StateVec(double)>& exact,
                          const std::function<bool(double)>& mask, int component) {
  ErrorNorms n;
  double sum = 0.0, sum2 = 0.0;
  long count = 0;
  for (int i = 0; i <= sol.grid.cells; ++i) {
    const double x = sol.grid.x(i);
    if (mask && !mask(x)) continue;
    const double e = std::abs(sol.u.at(i, component) - exact(x)[component]);
    sum += e;
    sum2 += e * e;
    n.linf = std::max(n.linf, e);
    ++count;
  }
  if (count == 0) throw std::invalid_argument("error_norms: empty mask");
  n.l1 = sum / count;
  n.l2 = std::sqrt(sum2 / count);
  return n;
}

ErrorNorms error_norms_2d(const Solution2D& sol,
                          const std::function<StateVec(double, double)>& exact, int component) {
  ErrorNorms n;
  double sum = 0.0, sum2 = 0.0;
  long count = 0;
  for (int j = 0; j <= sol.grid.ny; ++j)
    for (int i = 0; i <= sol.grid.nx; ++i) {
      const double x = sol.grid.x(i), y = sol.grid.y(j);
      const double e = std::abs(sol.u.at(i, j, component) - exact(x, y)[component]);
      sum += e;
      sum2 += e * e;
      n.linf = std::max(n.linf, e);
      ++count;
    }
  n.l1 = sum / count;
  n.l2 = std::sqrt(sum2 / count);
  return n;
}

double observed_order(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return NAN;
  return std::log2(e_coarse / e_fine);
}

std::vector<ErrorTableRow> convergence_study(const std::string& problem,
                                             const std::vector<int>& grids,
                                             const RunConfig& overrides) {
  const ProblemSpec& spec = find_problem(problem);
  const bool two_d = spec.dimension == 2;
  if ((two_d && !spec.p2->exact) || (!two_d && !spec.p1->exact))
    throw std::invalid_argument("convergence_study: problem has no exact solution: " + problem);

  std::vector<ErrorTableRow> rows;
  for (int n : grids) {
    ErrorTableRow row;
    row.n = n;
    row.m = two_d ? n : 0;
    try {
      RunConfig cfg = overrides;
      cfg.problem = problem;
      cfg.n = n;
      cfg.m = two_d ? n : 0;
      RunReport rep = run_to_steady(cfg);
      row.reason = rep.reason;
      row.iterations = rep.iterations;
      if (rep.reason == Termination::diverged) {
        row.failure = "diverged: " + rep.diagnostic;
      } else {
        if (two_d)
          row.e = error_norms_2d(*rep.sol2, spec.p2->exact, spec.p2->error_component);
        else
          row.e = error_norms_1d(*rep.sol1, spec.p1->exact, spec.p1->error_mask,
                                 spec.p1->error_component);
        row.ok = true;
      }
    } catch (const std::exception& e) {
      row.failure = e.what();
    }
    if (!rows.empty() && rows.back().ok && row.ok) {
      row.l1_order = observed_order(rows.back().e.l1, row.e.l1);
      row.l2_order = observed_order(rows.back().e.l2, row.e.l2);
      row.linf_order = observed_order(rows.back().e.linf, row.e.linf);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rdh
