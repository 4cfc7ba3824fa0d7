#include "rdhweno/models.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace rdh;

namespace {

double max_abs(const StateMat& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

StateMat minus(const StateMat& a, const StateMat& b) {
  StateMat c(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

StateMat recompose(const EigenSystem& es) {
  StateMat d(es.lambda.size());
  for (int k = 0; k < es.lambda.size(); ++k) d(k, k) = es.lambda[k];
  return es.right * d * es.left;
}

void check_eigensystem_1d(const Model1D& model, const StateVec& u, double scale) {
  const EigenSystem es = model.eigensystem(u);
  const StateMat j = model.jacobian(u);
  CHECK(max_abs(minus(es.right * es.left, StateMat::identity(u.size()))) < 1e-12);
  CHECK(max_abs(minus(recompose(es), j)) < 1e-10 * scale);
  const double h = 1e-7;
  for (int k = 0; k < u.size(); ++k) {
    StateVec up = u, um = u;
    up[k] += h;
    um[k] -= h;
    const StateVec d = model.flux(up) - model.flux(um);
    for (int r = 0; r < u.size(); ++r)
      CHECK(j(r, k) == doctest::Approx(d[r] / (2 * h)).epsilon(1e-5).scale(scale));
  }
}

void check_eigensystem_2d(const Model2D& model, const StateVec& u, double x, double y,
                          double scale) {
  for (int dir = 0; dir < 2; ++dir) {
    const EigenSystem es =
        dir == 0 ? model.eigensystem_x(u, x, y) : model.eigensystem_y(u, x, y);
    const StateMat j = dir == 0 ? model.jacobian_x(u, x, y) : model.jacobian_y(u, x, y);
    CHECK(max_abs(minus(es.right * es.left, StateMat::identity(u.size()))) < 1e-12);
    CHECK(max_abs(minus(recompose(es), j)) < 1e-10 * scale);
    const double h = 1e-7;
    for (int k = 0; k < u.size(); ++k) {
      StateVec up = u, um = u;
      up[k] += h;
      um[k] -= h;
      const StateVec d = dir == 0 ? model.flux_x(up, x, y) - model.flux_x(um, x, y)
                                  : model.flux_y(up, x, y) - model.flux_y(um, x, y);
      for (int r = 0; r < u.size(); ++r)
        CHECK(j(r, k) == doctest::Approx(d[r] / (2 * h)).epsilon(1e-5).scale(scale));
    }
  }
}

}  // namespace

TEST_CASE("average states") {
  CHECK(average_state_1d({0.0}, {1.0})[0] == doctest::Approx(0.5));
  CHECK(average_state_1d({2.0, -1.0}, {2.0, -1.0})[1] == doctest::Approx(-1.0));
  CHECK(average_state_2d({StateVec{0.0}, StateVec{1.0}, StateVec{0.0}, StateVec{1.0}})[0] ==
        doctest::Approx(0.5));
  CHECK(average_state_2d({StateVec{1.0}, StateVec{2.0}, StateVec{3.0}, StateVec{4.0}})[0] ==
        doctest::Approx(2.5));
}

TEST_CASE("burgers models: fluxes and sources") {
  auto b1 = make_burgers1d_trig_source();
  CHECK(b1->flux({2.0})[0] == doctest::Approx(2.0));
  CHECK(b1->source({1.0}, M_PI / 4, {0.0}).s[0] == doctest::Approx(0.5));
  const EigenSystem es = b1->eigensystem({0.7});  // scalar: L = R = 1, lambda = f'
  CHECK(es.lambda[0] == doctest::Approx(0.7));
  CHECK(es.left(0, 0) == doctest::Approx(1.0));
  CHECK(es.right(0, 0) == doctest::Approx(1.0));

  auto b2 = make_burgers1d_coupled_source();
  // s_u v + s_x at u=1, v=0, x=0 vanishes because sin(0) = 0
  CHECK(b2->source({1.0}, 0.0, {0.0}).s_total_x[0] == doctest::Approx(0.0));
}

TEST_CASE("shallow water: eigenvalues, bottom, unphysical state") {
  auto m = make_shallow_water(9.812);
  const EigenSystem es = m->eigensystem({1.0, 0.0});
  CHECK(es.lambda[0] == doctest::Approx(-std::sqrt(9.812)));
  CHECK(es.lambda[1] == doctest::Approx(std::sqrt(9.812)));
  CHECK(swe_bottom_dx(5.0) == doctest::Approx(0.0));
  CHECK(swe_bottom(5.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS((void)m->eigensystem({-0.5, 0.0}), UnphysicalStateError);
}

TEST_CASE("nozzle: flow function, area law, unphysical state") {
  CHECK(nozzle_flow_function(1.0) == doctest::Approx(1.0 / (1.2 * 1.2 * 1.2)));
  // A'/A against a centered difference of log A = -log f(M(x)), per branch
  for (double x : {0.2, 0.3, 0.7, 0.9}) {
    const double h = 1e-6;
    const double fd = (-std::log(nozzle_flow_function(nozzle_mach_profile(x + h))) +
                       std::log(nozzle_flow_function(nozzle_mach_profile(x - h)))) /
                      (2 * h);
    CHECK(nozzle_area_log_derivative(x) == doctest::Approx(fd).epsilon(1e-6));
    const double fd2 =
        (nozzle_area_log_derivative(x + h) - nozzle_area_log_derivative(x - h)) / (2 * h);
    CHECK(nozzle_area_log_derivative_dx(x) == doctest::Approx(fd2).epsilon(1e-5));
  }
  auto m = make_nozzle_euler();
  const double p = 1.0 / 1.4;
  const StateVec state{1.0, 2.9, p / 0.4 + 0.5 * 2.9 * 2.9};
  check_eigensystem_1d(*m, state, 10.0);
  CHECK_THROWS_AS((void)m->eigensystem({1.0, 2.9, 0.1}), UnphysicalStateError);
}

TEST_CASE("cauchy-riemann: shifted eigenvalues and fluxes") {
  auto m = make_cauchy_riemann();
  const StateVec w{1.0, 1.0};
  const EigenSystem ex = m->eigensystem_x(w, 0.5, 0.0);
  CHECK(ex.lambda[0] == doctest::Approx(0.5));
  CHECK(ex.lambda[1] == doctest::Approx(-1.5));
  const EigenSystem ey = m->eigensystem_y(w, 0.0, 0.0);
  CHECK(std::abs(ey.right(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(ey.right(1, 0) == doctest::Approx(ey.right(0, 0)));
  CHECK(ey.right(1, 1) == doctest::Approx(-ey.right(0, 1)));
  const StateVec fx = m->flux_x(w, 1.0, 0.0);
  CHECK(fx[0] == doctest::Approx(0.0));
  CHECK(fx[1] == doctest::Approx(-2.0));
  CHECK(m->source(w, 0.3, 0.1, {0.5, 0.5}, {0.25, 0.25}, {0.0, 0.0}).s[0] ==
        doctest::Approx(-2.0));
}

TEST_CASE("euler2d: flux, eigensystems, unphysical state") {
  auto m = make_euler2d();
  const StateVec u = euler2d_conserved(1.0, 2.9, 0.0, 1.0 / 1.4);
  CHECK(m->flux_x(u, 0, 0)[0] == doctest::Approx(2.9));
  check_eigensystem_2d(*m, u, 0.0, 0.0, 20.0);
  CHECK_THROWS_AS((void)m->eigensystem_x({-1.0, 0.0, 0.0, 1.0}, 0, 0), UnphysicalStateError);
}

TEST_CASE("random-state eigensystem identities for every system model") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> un(-1.0, 1.0);

  auto swe = make_shallow_water(9.812);
  auto noz = make_nozzle_euler();
  auto cr = make_cauchy_riemann();
  auto eu = make_euler2d();

  for (int t = 0; t < 100; ++t) {
    const double h = 0.2 + 2.0 * std::abs(un(rng));
    check_eigensystem_1d(*swe, {h, 3.0 * un(rng)}, 30.0);

    const double rho = 0.2 + 2.0 * std::abs(un(rng));
    const double vel = 3.0 * un(rng);
    const double p = 0.2 + 2.0 * std::abs(un(rng));
    check_eigensystem_1d(*noz, {rho, rho * vel, p / 0.4 + 0.5 * rho * vel * vel}, 50.0);

    check_eigensystem_2d(*cr, {un(rng), un(rng)}, 2.0 * un(rng), 2.0 * un(rng), 5.0);

    const double vy = 3.0 * un(rng);
    check_eigensystem_2d(*eu, euler2d_conserved(rho, vel, vy, p), 0.0, 0.0, 60.0);
  }
}

TEST_CASE("chain-rule sources match finite differences along smooth paths") {
  const double h = 1e-5;

  SUBCASE("1d models") {
    struct Case {
      std::shared_ptr<Model1D> model;
      std::function<StateVec(double)> path;
    };
    std::vector<Case> cases;
    cases.push_back({make_burgers1d_trig_source(),
                     [](double x) { return StateVec{1.0 + 0.3 * std::sin(x)}; }});
    cases.push_back({make_burgers1d_coupled_source(),
                     [](double x) { return StateVec{1.0 + 0.3 * std::sin(x)}; }});
    cases.push_back({make_shallow_water(9.812), [](double x) {
                       return StateVec{8.0 + std::cos(x), 0.5 * std::sin(2.0 * x)};
                     }});
    cases.push_back({make_nozzle_euler(), [](double x) {
                       const double rho = 1.0 + 0.2 * std::sin(x);
                       const double vel = 0.5 + 0.1 * std::cos(x);
                       const double p = 1.0 + 0.1 * std::sin(2.0 * x);
                       return StateVec{rho, rho * vel, p / 0.4 + 0.5 * rho * vel * vel};
                     }});
    for (auto& c : cases) {
      for (double x : {0.15, 0.4, 0.75}) {
        const StateVec v = (c.path(x + h) - c.path(x - h)) * (0.5 / h);
        const StateVec got = c.model->source(c.path(x), x, v).s_total_x;
        const StateVec fd = (c.model->source(c.path(x + h), x + h, v).s -
                             c.model->source(c.path(x - h), x - h, v).s) *
                            (0.5 / h);
        for (int k = 0; k < got.size(); ++k)
          CHECK(got[k] == doctest::Approx(fd[k]).epsilon(1e-6).scale(1.0));
      }
    }
  }

  SUBCASE("2d models including the cross derivative") {
    auto profile = [](double x, double y) { return 0.8 + 0.3 * std::sin(x + 0.5 * y); };
    for (auto model : {make_burgers2d_trig_source(), make_burgers2d_coupled_source()}) {
      for (double x : {0.2, 0.5}) {
        for (double y : {0.1, 0.4}) {
          // carried derivatives of the chosen path
          auto s_at = [&](double a, double b) {
            const StateVec vv{0.3 * std::cos(a + 0.5 * b)};
            const StateVec ww{0.15 * std::cos(a + 0.5 * b)};
            const StateVec zz{-0.15 * std::sin(a + 0.5 * b)};
            return model->source({profile(a, b)}, a, b, vv, ww, zz);
          };
          const SourceEval2D se = s_at(x, y);
          const double fx = (s_at(x + h, y).s[0] - s_at(x - h, y).s[0]) / (2 * h);
          const double fy = (s_at(x, y + h).s[0] - s_at(x, y - h).s[0]) / (2 * h);
          const double fxy = (s_at(x + h, y + h).s[0] - s_at(x + h, y - h).s[0] -
                              s_at(x - h, y + h).s[0] + s_at(x - h, y - h).s[0]) /
                             (4 * h * h);
          CHECK(se.s_x[0] == doctest::Approx(fx).epsilon(1e-6).scale(1.0));
          CHECK(se.s_y[0] == doctest::Approx(fy).epsilon(1e-6).scale(1.0));
          CHECK(se.s_xy[0] == doctest::Approx(fxy).epsilon(1e-4).scale(1.0));
        }
      }
    }
    // the self-similar system source is linear in the carried fields
    auto cr = make_cauchy_riemann();
    const SourceEval2D se =
        cr->source({0.3, -0.2}, 0.5, -0.5, {1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0});
    CHECK(se.s_x[0] == doctest::Approx(-2.0));
    CHECK(se.s_y[1] == doctest::Approx(-8.0));
    CHECK(se.s_xy[0] == doctest::Approx(-10.0));
  }
}
