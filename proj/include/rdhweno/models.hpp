#pragma once

/// Concrete benchmark models: Burgers variants with the three source terms,
/// shallow water over a smooth bump, quasi-1D nozzle Euler flow, the
/// self-similar Cauchy-Riemann system, and 2D Euler.

#include "rdhweno/model.hpp"

#include <functional>
#include <memory>

namespace rdh {

/// Scalar 1D conservation law f(u)_x = s(u, x) assembled from closures.
/// Eigensystem is the 1x1 identity pair with lambda = f'(u).
class ScalarModel1D final : public Model1D {
 public:
  using SourceFn = std::function<SourceEval1D(double u, double x, double v)>;

  ScalarModel1D(std::function<double(double)> flux, std::function<double(double)> dflux,
                SourceFn source = nullptr)
      : flux_(std::move(flux)), dflux_(std::move(dflux)), source_(std::move(source)) {}

  int components() const override { return 1; }
  StateVec flux(const StateVec& u) const override { return {flux_(u[0])}; }
  StateMat jacobian(const StateVec& u) const override {
    StateMat j(1);
    j(0, 0) = dflux_(u[0]);
    return j;
  }
  EigenSystem eigensystem(const StateVec& u) const override {
    return {StateVec{dflux_(u[0])}, StateMat::identity(1), StateMat::identity(1)};
  }
  bool has_source() const override { return static_cast<bool>(source_); }
  SourceEval1D source(const StateVec& u, double x, const StateVec& v) const override {
    if (!source_) return {StateVec(1), StateVec(1)};
    return source_(u[0], x, v[0]);
  }

 private:
  std::function<double(double)> flux_;
  std::function<double(double)> dflux_;
  SourceFn source_;
};

/// Scalar 2D conservation law f(u)_x + g(u)_y = s(u, x, y) from closures.
class ScalarModel2D final : public Model2D {
 public:
  using SourceFn =
      std::function<SourceEval2D(double u, double x, double y, double v, double w, double z)>;

  ScalarModel2D(std::function<double(double)> fx, std::function<double(double)> dfx,
                std::function<double(double)> gy, std::function<double(double)> dgy,
                SourceFn source = nullptr)
      : fx_(std::move(fx)), dfx_(std::move(dfx)), gy_(std::move(gy)), dgy_(std::move(dgy)),
        source_(std::move(source)) {}

  int components() const override { return 1; }
  StateVec flux_x(const StateVec& u, double, double) const override { return {fx_(u[0])}; }
  StateVec flux_y(const StateVec& u, double, double) const override { return {gy_(u[0])}; }
  StateMat jacobian_x(const StateVec& u, double, double) const override {
    StateMat j(1);
    j(0, 0) = dfx_(u[0]);
    return j;
  }
  StateMat jacobian_y(const StateVec& u, double, double) const override {
    StateMat j(1);
    j(0, 0) = dgy_(u[0]);
    return j;
  }
  EigenSystem eigensystem_x(const StateVec& u, double, double) const override {
    return {StateVec{dfx_(u[0])}, StateMat::identity(1), StateMat::identity(1)};
  }
  EigenSystem eigensystem_y(const StateVec& u, double, double) const override {
    return {StateVec{dgy_(u[0])}, StateMat::identity(1), StateMat::identity(1)};
  }
  bool has_source() const override { return static_cast<bool>(source_); }
  SourceEval2D source(const StateVec& u, double x, double y, const StateVec& v,
                      const StateVec& w, const StateVec& z) const override {
    if (!source_) return {StateVec(1), StateVec(1), StateVec(1), StateVec(1)};
    return source_(u[0], x, y, v[0], w[0], z[0]);
  }

 private:
  std::function<double(double)> fx_, dfx_, gy_, dgy_;
  SourceFn source_;
};

// --- Burgers family ---------------------------------------------------------

/// (u^2/2)_x = sin(x) cos(x); smooth steady state sin(x) on [0, pi].
std::shared_ptr<Model1D> make_burgers1d_trig_source();

/// (u^2/2)_x = -pi cos(pi x) u; transonic steady states with a shock.
std::shared_ptr<Model1D> make_burgers1d_coupled_source();

/// Diagonal 2D analogue of the trig-source problem:
/// (u^2/(2 sqrt 2))_x + (u^2/(2 sqrt 2))_y = sin(t) cos(t), t = (x+y)/sqrt(2).
std::shared_ptr<Model2D> make_burgers2d_trig_source();

/// Diagonal 2D analogue of the coupled-source problem with s = -pi cos(pi t) u.
std::shared_ptr<Model2D> make_burgers2d_coupled_source();

/// Shear problem (u^2/2)_x + u_y = 0; a fan merging into an oblique shock.
std::shared_ptr<Model2D> make_burgers2d_shear();

// --- Systems ----------------------------------------------------------------

/// 1D shallow water (h, hu) over the bottom b(x) = 5 exp(-(2/5)(x-5)^2):
/// source (0, -g h b_x) with total derivative (0, -g (v_h b_x + h b_xx)).
std::shared_ptr<Model1D> make_shallow_water(double gravity);

/// Shallow-water bottom topography helpers (exposed for initial/boundary data).
double swe_bottom(double x);
double swe_bottom_dx(double x);

/// Quasi-1D nozzle Euler flow (rho, rho u, E), gamma = 1.4, with source
/// -(A'(x)/A(x)) (rho u, rho u^2, u(E+p)). The area law A(x) f(M(x)) = const
/// is built from the linear Mach profile M(x) = 0.8 + x on [0, 1].
std::shared_ptr<Model1D> make_nozzle_euler();

/// Nozzle helpers: mass-flux function f, the smooth Mach profile, A'(x)/A(x)
/// and its x-derivative, and the isentropic/normal-shock state construction
/// used by the initial condition.
double nozzle_flow_function(double mach);
double nozzle_mach_profile(double x);
double nozzle_area_log_derivative(double x);
double nozzle_area_log_derivative_dx(double x);
/// Conserved state (rho, rho u, E) on the isentropic branch through the
/// reference stagnation state, scaled by (stagnation rho, p) = (rho0, p0).
StateVec nozzle_isentropic_state(double mach, double rho0, double p0);
/// Post-shock (Mach, stagnation rho, stagnation p) across a normal shock
/// with pre-shock Mach m1 and pre-shock stagnation reference (rho0, p0).
void nozzle_normal_shock(double m1, double rho0, double p0, double& m2, double& rho02,
                         double& p02);

/// Self-similar Cauchy-Riemann system on (xi, eta):
/// ((-xi I + A) W)_xi + ((-eta I + B) W)_eta = -2 W with A = diag(1, -1),
/// B the exchange matrix.
std::shared_ptr<Model2D> make_cauchy_riemann();

/// 2D Euler (rho, rho u, rho v, E), gamma = 1.4, no source.
std::shared_ptr<Model2D> make_euler2d();

/// Primitive (rho, u, v, p) to conserved (rho, rho u, rho v, E), gamma = 1.4.
StateVec euler2d_conserved(double rho, double u, double v, double p);

}  // namespace rdh
