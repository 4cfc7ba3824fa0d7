#include "rdhweno/problems.hpp"

#include "rdhweno/models.hpp"

#include <cmath>
#include <stdexcept>

namespace rdh {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kGravity = 9.812;

StateVec fd_derivative(const std::function<StateVec(double)>& f, double x) {
  const double h = 1e-6;
  StateVec d = f(x + h) - f(x - h);
  return d * (0.5 / h);
}

ProblemSpec problem_burgers1d_smooth() {
  ProblemSpec p;
  p.id = "burgers1d-smooth";
  p.description = "1D Burgers, source sin(x)cos(x) on [0,pi]; smooth steady state sin(x)";
  p.dimension = 1;
  p.defaults.n = 80;
  p.defaults.cfl = 0.6;
  p.defaults.residue_tol = 1e-17;
  p.defaults.grids = {20, 40, 80, 160, 320, 640};

  const double beta = 2.0;
  auto prob = std::make_shared<Problem1D>();
  prob->model = make_burgers1d_trig_source();
  prob->x0 = 0.0;
  prob->x1 = M_PI;
  prob->initial_u = [beta](double x) { return StateVec{beta * std::sin(x)}; };
  prob->initial_v = [beta](double x) { return StateVec{beta * std::cos(x)}; };
  auto exact_u = [](double x) { return StateVec{std::sin(x)}; };
  auto exact_v = [](double x) { return StateVec{std::cos(x)}; };
  prob->bc.left = prob->bc.right = BoundaryKind::dirichlet;
  prob->bc.left_data = {exact_u, exact_v};
  prob->bc.right_data = {exact_u, exact_v};
  prob->exact = exact_u;
  p.p1 = prob;
  return p;
}

ProblemSpec problem_burgers1d_interior_shock() {
  ProblemSpec p;
  p.id = "burgers1d-interior-shock";
  p.description =
      "1D Burgers, source sin(x)cos(x), beta=0.5; steady shock at x = pi - asin(sqrt(3)/2)";
  p.dimension = 1;
  p.defaults.n = 100;
  p.defaults.cfl = 0.6;
  p.defaults.grids = {100};

  const double beta = 0.5;
  const double xs = std::acos(-beta);  // conservation of the initial mass
  auto prob = std::make_shared<Problem1D>();
  prob->model = make_burgers1d_trig_source();
  prob->x0 = 0.0;
  prob->x1 = M_PI;
  prob->initial_u = [beta](double x) { return StateVec{beta * std::sin(x)}; };
  prob->initial_v = [beta](double x) { return StateVec{beta * std::cos(x)}; };
  prob->bc.left = prob->bc.right = BoundaryKind::dirichlet;
  prob->bc.left_data = {[](double x) { return StateVec{std::sin(x)}; },
                        [](double x) { return StateVec{std::cos(x)}; }};
  prob->bc.right_data = {[](double x) { return StateVec{-std::sin(x)}; },
                         [](double x) { return StateVec{-std::cos(x)}; }};
  prob->exact = [xs](double x) {
    return StateVec{x < xs ? std::sin(x) : -std::sin(x)};
  };
  p.p1 = prob;
  return p;
}

ProblemSpec problem_burgers1d_coupled_source() {
  ProblemSpec p;
  p.id = "burgers1d-coupled-source";
  p.description =
      "1D Burgers, solution-coupled source -pi cos(pi x) u on [0,1]; stable shock at 0.1486";
  p.dimension = 1;
  p.defaults.n = 100;
  p.defaults.cfl = 0.6;
  p.defaults.residue_tol = 1e-17;
  p.defaults.grids = {20, 40, 80, 160, 320, 640};

  const double xs = std::asin(0.45) / M_PI;  // Rankine-Hugoniot root, ~0.1486
  auto prob = std::make_shared<Problem1D>();
  prob->model = make_burgers1d_coupled_source();
  prob->x0 = 0.0;
  prob->x1 = 1.0;
  prob->initial_u = [](double x) { return StateVec{x < 0.5 ? 1.0 : -0.1}; };
  prob->initial_v = [](double) { return StateVec{0.0}; };
  prob->bc.left = prob->bc.right = BoundaryKind::dirichlet;
  prob->bc.left_data = {[](double x) { return StateVec{1.0 - std::sin(M_PI * x)}; },
                        [](double x) { return StateVec{-M_PI * std::cos(M_PI * x)}; }};
  prob->bc.right_data = {[](double x) { return StateVec{-0.1 - std::sin(M_PI * x)}; },
                         [](double x) { return StateVec{-M_PI * std::cos(M_PI * x)}; }};
  prob->exact = [xs](double x) {
    return StateVec{(x < xs ? 1.0 : -0.1) - std::sin(M_PI * x)};
  };
  prob->error_mask = [](double x) { return x >= 0.5; };
  p.p1 = prob;
  return p;
}

ProblemSpec problem_swe1d() {
  ProblemSpec p;
  p.id = "swe1d";
  p.description = "1D shallow water at rest over a Gaussian bump, g = 9.812";
  p.dimension = 1;
  p.defaults.n = 80;
  p.defaults.cfl = 0.6;
  p.defaults.residue_tol = 1e-17;
  p.defaults.grids = {20, 40, 80, 160, 320, 640};

  auto prob = std::make_shared<Problem1D>();
  prob->model = make_shallow_water(kGravity);
  prob->x0 = 0.0;
  prob->x1 = 10.0;
  auto exact_u = [](double x) { return StateVec{10.0 - swe_bottom(x), 0.0}; };
  auto exact_v = [](double x) { return StateVec{-swe_bottom_dx(x), 0.0}; };
  prob->initial_u = exact_u;
  prob->initial_v = exact_v;
  prob->bc.left = prob->bc.right = BoundaryKind::dirichlet;
  prob->bc.left_data = {exact_u, exact_v};
  prob->bc.right_data = {exact_u, exact_v};
  prob->exact = exact_u;
  prob->error_component = 0;  // water height
  p.p1 = prob;
  return p;
}

ProblemSpec problem_nozzle1d() {
  ProblemSpec p;
  p.id = "nozzle1d";
  p.description = "quasi-1D transonic nozzle, Mach 0.8 inlet, shock near x = 0.5";
  p.dimension = 1;
  p.defaults.n = 101;
  p.defaults.cfl = 0.6;
  p.defaults.grids = {101};

  // isentropic branches through the (-inf) stagnation reference ahead of the
  // shock and through the normal-shock state at Mach 1.3 behind it; both
  // follow the Mach ramps baked into the duct area law, so the initial field
  // already satisfies the steady equations away from round-off
  double m2, rho02, p02;
  nozzle_normal_shock(1.3, 1.0, 1.0, m2, rho02, p02);
  auto pre = [](double x) {
    return nozzle_isentropic_state(0.8 + std::min(x, 0.5), 1.0, 1.0);
  };
  auto post = [rho02, p02](double x) {
    return nozzle_isentropic_state(nozzle_mach_profile(std::max(x, 0.5)), rho02, p02);
  };

  auto prob = std::make_shared<Problem1D>();
  prob->model = make_nozzle_euler();
  prob->x0 = 0.0;
  prob->x1 = 1.0;
  prob->initial_u = [pre, post](double x) { return x < 0.5 ? pre(x) : post(x); };
  prob->initial_v = [pre, post](double x) {
    return x < 0.5 ? fd_derivative(pre, x) : fd_derivative(post, x);
  };
  prob->bc.left = BoundaryKind::dirichlet;
  prob->bc.left_data = {pre, [pre](double x) { return fd_derivative(pre, x); }};
  prob->bc.right = BoundaryKind::outflow;
  p.p1 = prob;
  return p;
}

ProblemSpec problem_burgers2d_smooth() {
  ProblemSpec p;
  p.id = "burgers2d-smooth";
  p.description = "2D diagonal Burgers with trig source; smooth steady state sin((x+y)/sqrt2)";
  p.dimension = 2;
  p.defaults.n = 40;
  p.defaults.cfl = 0.2;
  p.defaults.sigma = 0.0;
  p.defaults.residue_tol = 1e-17;
  p.defaults.grids = {10, 20, 40, 80, 160};

  const double beta = 1.2;
  auto prob = std::make_shared<Problem2D>();
  prob->model = make_burgers2d_trig_source();
  prob->x0 = prob->y0 = 0.0;
  prob->x1 = prob->y1 = M_PI / kSqrt2;
  auto theta = [](double x, double y) { return (x + y) / kSqrt2; };
  prob->initial_u = [=](double x, double y) { return StateVec{beta * std::sin(theta(x, y))}; };
  prob->initial_v = [=](double x, double y) {
    return StateVec{beta * std::cos(theta(x, y)) / kSqrt2};
  };
  prob->initial_w = prob->initial_v;
  prob->initial_z = [=](double x, double y) {
    return StateVec{-0.5 * beta * std::sin(theta(x, y))};
  };
  BoundaryData2D exact_data{
      [=](double x, double y) { return StateVec{std::sin(theta(x, y))}; },
      [=](double x, double y) { return StateVec{std::cos(theta(x, y)) / kSqrt2}; },
      [=](double x, double y) { return StateVec{std::cos(theta(x, y)) / kSqrt2}; },
      [=](double x, double y) { return StateVec{-0.5 * std::sin(theta(x, y))}; }};
  prob->bc.left = prob->bc.right = prob->bc.bottom = prob->bc.top = BoundaryKind::dirichlet;
  prob->bc.left_data = prob->bc.right_data = prob->bc.bottom_data = prob->bc.top_data =
      exact_data;
  prob->exact = exact_data.value;
  p.p2 = prob;
  return p;
}

ProblemSpec problem_burgers2d_diagonal_shock() {
  ProblemSpec p;
  p.id = "burgers2d-diagonal-shock";
  p.description = "2D diagonal Burgers with coupled source; stable shock at (x+y)/sqrt2 = 0.1486";
  p.dimension = 2;
  p.defaults.n = 80;
  p.defaults.cfl = 0.2;
  p.defaults.sigma = 4.0;
  p.defaults.grids = {80};

  const double xs = std::asin(0.45) / M_PI;
  auto prob = std::make_shared<Problem2D>();
  prob->model = make_burgers2d_coupled_source();
  prob->x0 = prob->y0 = 0.0;
  prob->x1 = prob->y1 = 1.0 / kSqrt2;
  auto theta = [](double x, double y) { return (x + y) / kSqrt2; };
  auto exact = [=](double x, double y) {
    const double t = theta(x, y);
    return StateVec{(t < xs ? 1.0 : -0.1) - std::sin(M_PI * t)};
  };
  prob->initial_u = [=](double x, double y) {
    return StateVec{theta(x, y) < 0.5 ? 1.0 : -0.1};
  };
  auto zero = [](double, double) { return StateVec{0.0}; };
  prob->initial_v = prob->initial_w = prob->initial_z = zero;
  BoundaryData2D exact_data{
      exact,
      [=](double x, double y) {
        return StateVec{-M_PI * std::cos(M_PI * theta(x, y)) / kSqrt2};
      },
      [=](double x, double y) {
        return StateVec{-M_PI * std::cos(M_PI * theta(x, y)) / kSqrt2};
      },
      [=](double x, double y) {
        return StateVec{0.5 * M_PI * M_PI * std::sin(M_PI * theta(x, y))};
      }};
  prob->bc.left = prob->bc.right = prob->bc.bottom = prob->bc.top = BoundaryKind::dirichlet;
  prob->bc.left_data = prob->bc.right_data = prob->bc.bottom_data = prob->bc.top_data =
      exact_data;
  prob->exact = exact;
  prob->sections.push_back({"diagonal", CrossSection::Kind::diagonal, 0.0});
  p.p2 = prob;
  return p;
}

ProblemSpec problem_burgers2d_shear() {
  ProblemSpec p;
  p.id = "burgers2d-shear";
  p.description = "Burgers in x advected in y; fan merging into a shock with foot (3/4, 1/2)";
  p.dimension = 2;
  p.defaults.n = 80;
  p.defaults.cfl = 0.2;
  p.defaults.sigma = 2.0;
  p.defaults.grids = {80};

  auto prob = std::make_shared<Problem2D>();
  prob->model = make_burgers2d_shear();
  prob->x0 = prob->y0 = 0.0;
  prob->x1 = prob->y1 = 1.0;
  prob->initial_u = [](double x, double) { return StateVec{1.5 - 2.0 * x}; };
  prob->initial_v = [](double, double) { return StateVec{-2.0}; };
  prob->initial_w = [](double, double) { return StateVec{0.0}; };
  prob->initial_z = [](double, double) { return StateVec{0.0}; };
  prob->bc.bottom = BoundaryKind::dirichlet;
  prob->bc.bottom_data = {[](double x, double) { return StateVec{1.5 - 2.0 * x}; },
                          [](double, double) { return StateVec{-2.0}; },
                          nullptr,
                          nullptr};
  prob->bc.left = BoundaryKind::dirichlet;
  prob->bc.left_data = {[](double, double) { return StateVec{1.5}; }, nullptr,
                        [](double, double) { return StateVec{0.0}; }, nullptr};
  prob->bc.right = BoundaryKind::dirichlet;
  prob->bc.right_data = {[](double, double) { return StateVec{-0.5}; }, nullptr,
                         [](double, double) { return StateVec{0.0}; }, nullptr};
  prob->bc.top = BoundaryKind::outflow;
  prob->exact = [](double x, double y) {
    if (y >= 0.5) {
      return StateVec{-2.0 * (x - 0.75) + (y - 0.5) <= 0.0 ? -0.5 : 1.5};
    }
    return StateVec{std::max(-0.5, std::min(1.5, (x - 0.75) / (y - 0.5)))};
  };
  prob->sections.push_back({"y025", CrossSection::Kind::fixed_y, 0.25});
  prob->sections.push_back({"y050", CrossSection::Kind::fixed_y, 0.50});
  prob->sections.push_back({"y075", CrossSection::Kind::fixed_y, 0.75});
  p.p2 = prob;
  return p;
}

ProblemSpec problem_cauchy_riemann() {
  ProblemSpec p;
  p.id = "cauchy-riemann";
  p.description = "self-similar Cauchy-Riemann Riemann problem on [-2,2]^2 at t = 1";
  p.dimension = 2;
  p.defaults.n = 80;
  p.defaults.cfl = 0.2;
  p.defaults.sigma = 1.0;
  p.defaults.delta = 0.4;
  p.defaults.grids = {80};

  auto prob = std::make_shared<Problem2D>();
  prob->model = make_cauchy_riemann();
  prob->x0 = prob->y0 = -2.0;
  prob->x1 = prob->y1 = 2.0;
  // steady-state field of the self-similar solution at t = 1; the text
  // prescribes it both as the initial condition and on the boundary
  auto exact = [](double x, double y) {
    const double u = (x > 1.0) ? (y > 1.0 ? 1.0 : -1.0)
                               : (y > 1.0 ? -1.0 : (y > -1.0 ? 1.5 : 1.0));
    const double v = (y > 1.0) ? (x > -1.0 ? 1.0 : -1.0)
                               : (x > -1.0 ? -1.0 : (y > -1.0 ? 1.5 : 2.0));
    return StateVec{u, v};
  };
  prob->initial_u = exact;
  auto zero = [](double, double) { return StateVec{0.0, 0.0}; };
  prob->initial_v = prob->initial_w = prob->initial_z = zero;
  BoundaryData2D exact_data{exact, zero, zero, zero};
  prob->bc.left = prob->bc.right = prob->bc.bottom = prob->bc.top = BoundaryKind::dirichlet;
  prob->bc.left_data = prob->bc.right_data = prob->bc.bottom_data = prob->bc.top_data =
      exact_data;
  prob->exact = exact;
  p.p2 = prob;
  return p;
}

ProblemSpec problem_euler2d_shock_reflection() {
  ProblemSpec p;
  p.id = "euler2d-shock-reflection";
  p.description = "regular shock reflection off a wall, Mach 2.9 inflow on [0,4]x[0,1]";
  p.dimension = 2;
  p.defaults.n = 160;
  p.defaults.m = 40;
  p.defaults.cfl = 0.2;
  p.defaults.sigma = 8.0;
  p.defaults.delta = 0.1;
  p.defaults.grids = {160};

  const StateVec inflow = euler2d_conserved(1.0, 2.9, 0.0, 1.0 / 1.4);
  const StateVec top = euler2d_conserved(1.69997, 2.61934, -0.50632, 1.52819);

  auto prob = std::make_shared<Problem2D>();
  prob->model = make_euler2d();
  prob->x0 = 0.0;
  prob->x1 = 4.0;
  prob->y0 = 0.0;
  prob->y1 = 1.0;
  prob->initial_u = [inflow, top](double, double y) {
    return y >= 1.0 - 1e-12 ? top : inflow;
  };
  auto zero = [](double, double) { return StateVec(4); };
  prob->initial_v = prob->initial_w = prob->initial_z = zero;
  prob->bc.left = BoundaryKind::dirichlet;
  prob->bc.left_data = {[inflow](double, double) { return inflow; }, nullptr, zero, nullptr};
  prob->bc.top = BoundaryKind::dirichlet;
  prob->bc.top_data = {[top](double, double) { return top; }, zero, nullptr, nullptr};
  prob->bc.bottom = BoundaryKind::wall;
  prob->bc.wall_odd = {false, false, true, false};  // rho v flips across the wall
  prob->bc.right = BoundaryKind::outflow;
  p.p2 = prob;
  return p;
}

std::map<std::string, ProblemSpec> build_registry() {
  std::map<std::string, ProblemSpec> reg;
  for (auto&& spec :
       {problem_burgers1d_smooth(), problem_burgers1d_interior_shock(),
        problem_burgers1d_coupled_source(), problem_swe1d(), problem_nozzle1d(),
        problem_burgers2d_smooth(), problem_burgers2d_diagonal_shock(), problem_burgers2d_shear(),
        problem_cauchy_riemann(), problem_euler2d_shock_reflection()})
    reg.emplace(spec.id, spec);
  return reg;
}

}  // namespace

const std::map<std::string, ProblemSpec>& problem_registry() {
  static const std::map<std::string, ProblemSpec> reg = build_registry();
  return reg;
}

const ProblemSpec& find_problem(const std::string& id) {
  const auto& reg = problem_registry();
  auto it = reg.find(id);
  if (it == reg.end()) throw std::invalid_argument("unknown problem: " + id);
  return it->second;
}

}  // namespace rdh
