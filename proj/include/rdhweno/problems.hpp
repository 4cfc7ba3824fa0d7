#pragma once

/// Problem registry: the benchmark steady-state problems with their models,
/// domains, initial/boundary data, exact solutions where known, and the
/// per-problem default parameters.

#include "rdhweno/boundary.hpp"
#include "rdhweno/grid.hpp"
#include "rdhweno/model.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rdh {

struct ProblemDefaults {
  int n = 80;
  int m = 0;  // 2D only; 0 = square grid
  double cfl = 0.6;
  double sigma = 0.0;
  double delta = 1e-15;
  double epsilon = 1e-10;
  double residue_tol = 1e-13;
  long max_iters = 1000000;
  int stagnation_window = 5000;
  std::vector<int> grids;  // convergence-study grid list
};

/// Saved line cuts written next to the solution (nearest nodal row for
/// fixed-y cuts; the grid diagonal for diagonal cuts).
struct CrossSection {
  enum class Kind { fixed_y, diagonal };
  std::string name;
  Kind kind = Kind::fixed_y;
  double y = 0.0;
};

struct Problem1D {
  std::shared_ptr<Model1D> model;
  double x0 = 0.0, x1 = 1.0;
  std::function<StateVec(double)> initial_u;
  std::function<StateVec(double)> initial_v;
  BoundaryPolicy1D bc;
  std::function<StateVec(double)> exact;   // null if unknown
  std::function<bool(double)> error_mask;  // null = whole domain
  int error_component = 0;
};

struct Problem2D {
  std::shared_ptr<Model2D> model;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  std::function<StateVec(double, double)> initial_u;
  std::function<StateVec(double, double)> initial_v;
  std::function<StateVec(double, double)> initial_w;
  std::function<StateVec(double, double)> initial_z;
  BoundaryPolicy2D bc;
  std::function<StateVec(double, double)> exact;
  std::vector<CrossSection> sections;
  int error_component = 0;
};

struct ProblemSpec {
  std::string id;
  std::string description;
  int dimension = 1;
  ProblemDefaults defaults;
  std::shared_ptr<Problem1D> p1;
  std::shared_ptr<Problem2D> p2;
};

/// All registered problems, keyed by id.
const std::map<std::string, ProblemSpec>& problem_registry();

/// Lookup; throws std::invalid_argument for an unknown id.
const ProblemSpec& find_problem(const std::string& id);

}  // namespace rdh
