#include "rdhweno/rd_core_2d.hpp"

#include "rdhweno/models.hpp"
#include "rdhweno/rd_core_1d.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace rdh;

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

/// 3x3-cell window around (x0, y0) sampled from closed forms; cell (1,1) has
/// a complete stencil.
Solution2D sampled_window(const std::shared_ptr<Model2D>& model, double x0, double y0,
                          double dx, double dy, const std::function<double(double, double)>& u,
                          const std::function<double(double, double)>& ux,
                          const std::function<double(double, double)>& uy,
                          const std::function<double(double, double)>& uxy) {
  Solution2D sol({x0 - dx, x0 + 2 * dx, y0 - dy, y0 + 2 * dy, 3, 3}, model->components());
  for (int j = -1; j <= 4; ++j)
    for (int i = -1; i <= 4; ++i) {
      const double x = sol.grid.x(i), y = sol.grid.y(j);
      sol.u.set_state(i, j, StateVec{u(x, y)});
      sol.v.set_state(i, j, StateVec{ux(x, y)});
      sol.w.set_state(i, j, StateVec{uy(x, y)});
      sol.z.set_state(i, j, StateVec{uxy(x, y)});
    }
  return sol;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n = 2048) {
  double s = f(a) + f(b);
  const double h = (b - a) / n;
  for (int k = 1; k < n; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("edge_flux_integral") {
  auto model = make_burgers2d_trig_source();
  SUBCASE("constant state integrates exactly") {
    auto c = [](double, double) { return 0.9; };
    auto z = [](double, double) { return 0.0; };
    Solution2D sol = sampled_window(model, 0.4, 0.3, 0.1, 0.12, c, z, z, z);
    const double f = 0.25 * kSqrt2 * 0.9 * 0.9;
    const StateVec ve = edge_flux_integral(sol, *model, {Edge::Orientation::vertical, 1, 1});
    CHECK(ve[0] == doctest::Approx(f * 0.12).epsilon(1e-14));
    const StateVec he = edge_flux_integral(sol, *model, {Edge::Orientation::horizontal, 1, 1});
    CHECK(he[0] == doctest::Approx(f * 0.1).epsilon(1e-14));
  }
  SUBCASE("y-independent data: vertical integral is f(u(x_i)) dy") {
    auto ux_only = [](double x, double) { return 0.3 + 0.2 * x; };
    auto dxf = [](double, double) { return 0.2; };
    auto z = [](double, double) { return 0.0; };
    Solution2D sol = sampled_window(model, 0.4, 0.3, 0.1, 0.12, ux_only, dxf, z, z);
    const double u = ux_only(0.4, 0.0);
    const StateVec ve = edge_flux_integral(sol, *model, {Edge::Orientation::vertical, 1, 1});
    CHECK(ve[0] == doctest::Approx(0.25 * kSqrt2 * u * u * 0.12).epsilon(1e-13));
  }
  SUBCASE("seventh-order decay against adaptive quadrature of f(u)") {
    auto uf = [](double x, double y) { return std::sin((x + y) / kSqrt2); };
    auto uxf = [](double x, double y) { return std::cos((x + y) / kSqrt2) / kSqrt2; };
    auto uxyf = [](double x, double y) { return -0.5 * std::sin((x + y) / kSqrt2); };
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double d = 0.2 / (1 << k);
      Solution2D sol = sampled_window(model, 0.7, 0.4, d, d, uf, uxf, uxf, uxyf);
      const StateVec ve = edge_flux_integral(sol, *model, {Edge::Orientation::vertical, 1, 1});
      const double exact = simpson(
          [&](double y) {
            const double u = uf(0.7, y);
            return 0.25 * kSqrt2 * u * u;
          },
          0.4, 0.4 + d);
      const double err = std::abs(ve[0] - exact);
      if (k > 0) CHECK(std::log2(prev / err) >= 6.5);
      prev = err;
    }
  }
}

TEST_CASE("source_double_integral") {
  SUBCASE("constant source integrates to c dx dy") {
    auto model = std::make_shared<ScalarModel2D>(
        [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
        [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
        [](double, double, double, double, double, double) -> SourceEval2D {
          return {{2.5}, {0.0}, {0.0}, {0.0}};
        });
    auto z = [](double, double) { return 0.0; };
    auto c = [](double, double) { return 0.4; };
    Solution2D sol = sampled_window(model, 0.2, 0.5, 0.1, 0.15, c, z, z, z);
    CHECK(source_double_integral(sol, *model, 1, 1)[0] ==
          doctest::Approx(2.5 * 0.1 * 0.15).epsilon(1e-14));
  }
  SUBCASE("trig source: seventh-order decay against the exact double integral") {
    auto model = make_burgers2d_trig_source();
    auto uf = [](double x, double y) { return std::sin((x + y) / kSqrt2); };
    auto uxf = [](double x, double y) { return std::cos((x + y) / kSqrt2) / kSqrt2; };
    auto uxyf = [](double x, double y) { return -0.5 * std::sin((x + y) / kSqrt2); };
    // antiderivative of sin(t)cos(t) = sin(sqrt2 (x+y))/2 in both variables
    auto anti = [](double x, double y) { return -0.25 * std::sin(kSqrt2 * (x + y)); };
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double d = 0.2 / (1 << k);
      Solution2D sol = sampled_window(model, 0.7, 0.4, d, d, uf, uxf, uxf, uxyf);
      const double exact = anti(0.7 + d, 0.4 + d) - anti(0.7, 0.4 + d) - anti(0.7 + d, 0.4) +
                           anti(0.7, 0.4);
      const double err = std::abs(source_double_integral(sol, *model, 1, 1)[0] - exact);
      if (k > 0) CHECK(std::log2(prev / err) >= 6.5);
      prev = err;
    }
  }
}

TEST_CASE("cell_total_residual") {
  SUBCASE("constant state, no source") {
    auto model = make_burgers2d_shear();
    auto c = [](double, double) { return 1.1; };
    auto z = [](double, double) { return 0.0; };
    Solution2D sol = sampled_window(model, 0.3, 0.3, 0.1, 0.1, c, z, z, z);
    CHECK(cell_total_residual(sol, *model, 1, 1)[0] == doctest::Approx(0.0));
  }
  SUBCASE("exact steady data decays at order >= 6.5 per cell") {
    auto model = make_burgers2d_trig_source();
    auto uf = [](double x, double y) { return std::sin((x + y) / kSqrt2); };
    auto uxf = [](double x, double y) { return std::cos((x + y) / kSqrt2) / kSqrt2; };
    auto uxyf = [](double x, double y) { return -0.5 * std::sin((x + y) / kSqrt2); };
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double d = 0.2 / (1 << k);
      Solution2D sol = sampled_window(model, 0.7, 0.4, d, d, uf, uxf, uxf, uxyf);
      const double err = std::abs(cell_total_residual(sol, *model, 1, 1)[0]);
      if (k > 0) CHECK(std::log2(prev / err) >= 6.5);
      prev = err;
    }
  }
}

TEST_CASE("distribute_scalar_2d and dissipation_residuals") {
  auto model = make_burgers2d_shear();  // f' = u, g' = 1
  SUBCASE("upwind corner cases") {
    auto p = distribute_scalar_2d(2.0, 1.5, *model, 1e-15, 0.5, 0.5);  // both speeds > 0
    CHECK(p[0] == doctest::Approx(0.0));
    CHECK(p[1] == doctest::Approx(0.0));
    CHECK(p[2] == doctest::Approx(0.0));
    CHECK(p[3] == doctest::Approx(2.0));
    auto q = distribute_scalar_2d(2.0, -1.5, *model, 1e-15, 0.5, 0.5);  // f' < 0 < g'
    CHECK(q[2] == doctest::Approx(2.0));
    CHECK(q[3] == doctest::Approx(0.0));
  }
  SUBCASE("four parts always sum to phi") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
      const double phi = 2 * un(rng), ubar = 2 * un(rng), delta = 0.05 + std::abs(un(rng));
      const auto p = distribute_scalar_2d(phi, ubar, *model, delta, 0.3, 0.4);
      CHECK(p[0] + p[1] + p[2] + p[3] == doctest::Approx(phi).epsilon(1e-12).scale(1.0));
    }
  }
  SUBCASE("dissipation: printed example and zero sum") {
    const std::array<StateVec, 4> corners{StateVec{0.0}, StateVec{1.0}, StateVec{0.0},
                                          StateVec{1.0}};
    const auto d = dissipation_residuals(corners, 2.0, 1.0, 1.0);
    CHECK(d[0][0] == doctest::Approx(-1.0));
    CHECK(d[0][0] + d[1][0] + d[2][0] + d[3][0] == doctest::Approx(0.0));
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> un(-2.0, 2.0);
    for (int t = 0; t < 200; ++t) {
      const std::array<StateVec, 4> cs{StateVec{un(rng)}, StateVec{un(rng)},
                                       StateVec{un(rng)}, StateVec{un(rng)}};
      const auto dd = dissipation_residuals(cs, 0.5 + std::abs(un(rng)), 0.7, 0.4);
      const double sum = dd[0][0] + dd[1][0] + dd[2][0] + dd[3][0];
      const double mag = std::abs(dd[0][0]) + std::abs(dd[1][0]) + std::abs(dd[2][0]) +
                         std::abs(dd[3][0]);
      CHECK(std::abs(sum) <= 1e-14 * std::max(mag, 1.0));
    }
    const std::array<StateVec, 4> eq{StateVec{0.7}, StateVec{0.7}, StateVec{0.7},
                                     StateVec{0.7}};
    for (const auto& v : dissipation_residuals(eq, 3.0, 0.5, 0.5))
      CHECK(v[0] == doctest::Approx(0.0));
  }
}

TEST_CASE("distribute_system_2d") {
  SUBCASE("m = 1 reduces to the scalar four-way split") {
    auto model = make_burgers2d_trig_source();
    const auto sys = distribute_system_2d({1.3}, {0.4}, *model, 0.3, 0.2, 0.5);
    const auto sc = distribute_scalar_2d(1.3, 0.4, *model, 0.3, 0.2, 0.5);
    for (int k = 0; k < 4; ++k) CHECK(sys[k][0] == doctest::Approx(sc[k]).epsilon(1e-13));
  }
  SUBCASE("supersonic state: everything to the far corner") {
    auto eu = make_euler2d();
    const StateVec ubar = euler2d_conserved(1.0, 3.0, 3.0, 1.0 / 1.4);  // all lambda > 0
    const StateVec phi{0.4, -0.2, 0.9, 1.1};
    const auto p = distribute_system_2d(phi, ubar, *eu, 0.1, 0.0, 0.0);
    for (int c = 0; c < 4; ++c) {
      CHECK(std::abs(p[0][c]) < 1e-12);
      CHECK(std::abs(p[1][c]) < 1e-12);
      CHECK(std::abs(p[2][c]) < 1e-12);
      CHECK(p[3][c] == doctest::Approx(phi[c]).epsilon(1e-12));
    }
  }
  SUBCASE("conservation over random states (euler and self-similar system)") {
    auto eu = make_euler2d();
    auto cr = make_cauchy_riemann();
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
      if (t % 2 == 0) {
        const StateVec ubar = euler2d_conserved(0.3 + 2 * std::abs(un(rng)), 3 * un(rng),
                                                3 * un(rng), 0.3 + 2 * std::abs(un(rng)));
        StateVec phi(4);
        for (int c = 0; c < 4; ++c) phi[c] = 2 * un(rng);
        const auto p = distribute_system_2d(phi, ubar, *eu, 0.1, 0.0, 0.0);
        for (int c = 0; c < 4; ++c)
          CHECK(p[0][c] + p[1][c] + p[2][c] + p[3][c] ==
                doctest::Approx(phi[c]).epsilon(1e-12).scale(1.0));
      } else {
        const StateVec ubar{un(rng), un(rng)};
        StateVec phi{2 * un(rng), 2 * un(rng)};
        const auto p = distribute_system_2d(phi, ubar, *cr, 0.4, 2 * un(rng), 2 * un(rng));
        for (int c = 0; c < 2; ++c)
          CHECK(p[0][c] + p[1][c] + p[2][c] + p[3][c] ==
                doctest::Approx(phi[c]).epsilon(1e-12).scale(1.0));
      }
    }
  }
  SUBCASE("inflow state of the shock-reflection case") {
    auto eu = make_euler2d();
    const StateVec ubar = euler2d_conserved(1.0, 2.9, 0.0, 1.0 / 1.4);
    const StateVec phi{0.1, 0.2, -0.3, 0.4};
    const auto p = distribute_system_2d(phi, ubar, *eu, 0.1, 0.0, 0.0);
    for (int c = 0; c < 4; ++c)
      CHECK(p[0][c] + p[1][c] + p[2][c] + p[3][c] ==
            doctest::Approx(phi[c]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("euler_step_2d: steady fixed point on a uniform state") {
  auto model = make_burgers2d_shear();
  Solution2D sol({0.0, 1.0, 0.0, 1.0, 10, 10}, 1);
  for (int j = -1; j <= 11; ++j)
    for (int i = -1; i <= 11; ++i) {
      sol.u.set_state(i, j, StateVec{0.7});
      sol.v.set_state(i, j, StateVec{0.0});
      sol.w.set_state(i, j, StateVec{0.0});
      sol.z.set_state(i, j, StateVec{0.0});
    }
  BoundaryPolicy2D bc;  // all dirichlet, constant
  auto cval = [](double, double) { return StateVec{0.7}; };
  auto zval = [](double, double) { return StateVec{0.0}; };
  bc.left_data = bc.right_data = bc.bottom_data = bc.top_data = {cval, zval, zval, zval};
  Solution2D before = sol;
  const double res = euler_step_2d(sol, *model, bc, 0.01, 2.0, 1e-15);
  CHECK(res == doctest::Approx(0.0));
  for (int j = 0; j <= 10; ++j)
    for (int i = 0; i <= 10; ++i)
      CHECK(sol.u.at(i, j, 0) == doctest::Approx(before.u.at(i, j, 0)));
}

TEST_CASE("derivative_sweep_2d") {
  auto model = make_burgers2d_trig_source();
  SUBCASE("bilinear data with exact old derivatives is reproduced") {
    auto uf = [](double x, double y) { return 0.4 + 0.3 * x - 0.2 * y + 0.5 * x * y; };
    auto vf = [](double x, double y) { return StateVec{0.3 + 0.5 * y}; };
    auto wf = [](double x, double y) { return StateVec{-0.2 + 0.5 * x}; };
    auto zf = [](double, double) { return StateVec{0.5}; };
    Solution2D sol({0.0, 1.0, 0.0, 1.0, 10, 10}, 1);
    for (int j = -1; j <= 11; ++j)
      for (int i = -1; i <= 11; ++i) {
        const double x = sol.grid.x(i), y = sol.grid.y(j);
        sol.u.set_state(i, j, StateVec{uf(x, y)});
        sol.v.set_state(i, j, vf(x, y));
        sol.w.set_state(i, j, wf(x, y));
        sol.z.set_state(i, j, zf(x, y));
      }
    BoundaryPolicy2D bc;
    auto uval = [uf](double x, double y) { return StateVec{uf(x, y)}; };
    bc.left_data = bc.right_data = bc.bottom_data = bc.top_data = {uval, vf, wf, zf};
    derivative_sweep_2d(sol, bc);
    for (int j = 0; j <= 10; ++j)
      for (int i = 0; i <= 10; ++i) {
        const double x = sol.grid.x(i), y = sol.grid.y(j);
        CHECK(sol.v.at(i, j, 0) == doctest::Approx(vf(x, y)[0]).epsilon(1e-12));
        CHECK(sol.w.at(i, j, 0) == doctest::Approx(wf(x, y)[0]).epsilon(1e-12));
        CHECK(sol.z.at(i, j, 0) == doctest::Approx(zf(x, y)[0]).epsilon(1e-11));
      }
  }
  SUBCASE("order >= 3.5 for v, w, z on the diagonal sine") {
    auto uf = [](double x, double y) { return StateVec{std::sin((x + y) / kSqrt2)}; };
    auto df = [](double x, double y) {
      return StateVec{std::cos((x + y) / kSqrt2) / kSqrt2};
    };
    auto zf = [](double x, double y) { return StateVec{-0.5 * std::sin((x + y) / kSqrt2)}; };
    double preve[3] = {0, 0, 0};
    for (int k = 0; k < 4; ++k) {
      const int n = 12 << k;
      Solution2D sol({0.0, 2.0, 0.0, 2.0, n, n}, 1);
      for (int j = -1; j <= n + 1; ++j)
        for (int i = -1; i <= n + 1; ++i) {
          const double x = sol.grid.x(i), y = sol.grid.y(j);
          sol.u.set_state(i, j, uf(x, y));
          sol.v.set_state(i, j, df(x, y));
          sol.w.set_state(i, j, df(x, y));
          sol.z.set_state(i, j, zf(x, y));
        }
      BoundaryPolicy2D bc;
      bc.left_data = bc.right_data = bc.bottom_data = bc.top_data = {uf, df, df, zf};
      derivative_sweep_2d(sol, bc);
      double err[3] = {0, 0, 0};
      for (int j = 1; j < n; ++j)
        for (int i = 1; i < n; ++i) {
          const double x = sol.grid.x(i), y = sol.grid.y(j);
          err[0] = std::max(err[0], std::abs(sol.v.at(i, j, 0) - df(x, y)[0]));
          err[1] = std::max(err[1], std::abs(sol.w.at(i, j, 0) - df(x, y)[0]));
          err[2] = std::max(err[2], std::abs(sol.z.at(i, j, 0) - zf(x, y)[0]));
        }
      if (k > 0)
        for (int f = 0; f < 3; ++f) CHECK(std::log2(preve[f] / err[f]) >= 3.5);
      for (int f = 0; f < 3; ++f) preve[f] = err[f];
    }
  }
  SUBCASE("constant field has zero derivatives") {
    Solution2D sol({0.0, 1.0, 0.0, 1.0, 10, 10}, 1);
    for (int j = -1; j <= 11; ++j)
      for (int i = -1; i <= 11; ++i) {
        sol.u.set_state(i, j, StateVec{2.2});
        sol.v.set_state(i, j, StateVec{0.3});  // stale
        sol.w.set_state(i, j, StateVec{-0.4});
        sol.z.set_state(i, j, StateVec{0.1});
      }
    BoundaryPolicy2D bc;
    auto cval = [](double, double) { return StateVec{2.2}; };
    auto zval = [](double, double) { return StateVec{0.0}; };
    bc.left_data = bc.right_data = bc.bottom_data = bc.top_data = {cval, zval, zval, zval};
    derivative_sweep_2d(sol, bc);
    for (int j = 0; j <= 10; ++j)
      for (int i = 0; i <= 10; ++i) {
        CHECK(sol.v.at(i, j, 0) == doctest::Approx(0.0));
        CHECK(sol.w.at(i, j, 0) == doctest::Approx(0.0));
        CHECK(sol.z.at(i, j, 0) == doctest::Approx(0.0));
      }
  }
}

TEST_CASE("dimension consistency: y-constant data reduces to the 1D scheme") {
  // 1D model f = u^2/2, s = sin x cos x vs a 2D model with the same f, any g,
  // and the same (y-independent) source
  auto m1 = make_burgers1d_trig_source();
  auto m2 = std::make_shared<ScalarModel2D>(
      [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
      [](double u) { return u; }, [](double) { return 1.0; },
      [](double, double x, double, double v, double, double) -> SourceEval2D {
        const double s = std::sin(x), c = std::cos(x);
        (void)v;
        return {{s * c}, {c * c - s * s}, {0.0}, {0.0}};
      });

  const double dx = 0.11, dy = 0.07, x0 = 0.6;
  auto u1 = [](double x) { return StateVec{0.3 + 0.4 * std::sin(3.0 * x)}; };
  auto v1 = [](double x) { return StateVec{1.2 * std::cos(3.0 * x)}; };
  Solution1D s1({x0 - dx, x0 + 2 * dx, 3}, 1);
  for (int i = -1; i <= 4; ++i) {
    s1.u.set_state(i, u1(s1.grid.x(i)));
    s1.v.set_state(i, v1(s1.grid.x(i)));
  }
  Solution2D s2({x0 - dx, x0 + 2 * dx, 0.0, 3 * dy, 3, 3}, 1);
  for (int j = -1; j <= 4; ++j)
    for (int i = -1; i <= 4; ++i) {
      s2.u.set_state(i, j, u1(s2.grid.x(i)));
      s2.v.set_state(i, j, v1(s2.grid.x(i)));
      s2.w.set_state(i, j, StateVec{0.0});
      s2.z.set_state(i, j, StateVec{0.0});
    }

  const StateVec phi1 = interval_total_residual(s1, 1, *m1);
  const StateVec phi2 = cell_total_residual(s2, *m2, 1, 1);
  CHECK(phi2[0] == doctest::Approx(dy * phi1[0]).epsilon(1e-12));

  // distribution degenerates to the 1D split replicated with weights (1-b, b)
  const StateVec ubar1 = average_state_1d(s1.u.state(1), s1.u.state(2));
  const auto [p1, p2] = distribute_system_1d(phi1, ubar1, *m1, 1e-15);
  const std::array<StateVec, 4> corners{s2.u.state(1, 1), s2.u.state(2, 1), s2.u.state(1, 2),
                                        s2.u.state(2, 2)};
  const StateVec ubar2 = average_state_2d(corners);
  const auto parts = distribute_scalar_2d(phi2[0], ubar2[0], *m2, 1e-15, x0 + dx / 2, dy / 2);
  const double b = roe_alpha(1.0, 1e-15);  // g' = 1 -> b = 1
  CHECK(parts[0] == doctest::Approx((1 - b) * dy * p1[0]).epsilon(1e-12).scale(1.0));
  CHECK(parts[1] == doctest::Approx((1 - b) * dy * p2[0]).epsilon(1e-12).scale(1.0));
  CHECK(parts[2] == doctest::Approx(b * dy * p1[0]).epsilon(1e-12).scale(1.0));
  CHECK(parts[3] == doctest::Approx(b * dy * p2[0]).epsilon(1e-12).scale(1.0));
}
