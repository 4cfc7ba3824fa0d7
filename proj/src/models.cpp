#include "rdhweno/models.hpp"

#include <cmath>

namespace rdh {
namespace {

constexpr double kGamma = 1.4;
constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

// --- Burgers family ---------------------------------------------------------

std::shared_ptr<Model1D> make_burgers1d_trig_source() {
  return std::make_shared<ScalarModel1D>(
      [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
      [](double, double x, double) -> SourceEval1D {
        const double s = std::sin(x), c = std::cos(x);
        return {{s * c}, {c * c - s * s}};
      });
}

std::shared_ptr<Model1D> make_burgers1d_coupled_source() {
  const double pi = M_PI;
  return std::make_shared<ScalarModel1D>(
      [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
      [pi](double u, double x, double v) -> SourceEval1D {
        const double c = std::cos(pi * x);
        // s = -pi cos(pi x) u;  ds/du v + ds/dx = -pi c v + pi^2 sin(pi x) u
        return {{-pi * c * u}, {-pi * c * v + pi * pi * std::sin(pi * x) * u}};
      });
}

std::shared_ptr<Model2D> make_burgers2d_trig_source() {
  return std::make_shared<ScalarModel2D>(
      [](double u) { return 0.25 * kSqrt2 * u * u; }, [](double u) { return u / kSqrt2; },
      [](double u) { return 0.25 * kSqrt2 * u * u; }, [](double u) { return u / kSqrt2; },
      [](double, double x, double y, double, double, double) -> SourceEval2D {
        const double t = (x + y) / kSqrt2;
        const double s = 0.5 * std::sin(2.0 * t);
        const double st = std::cos(2.0 * t);  // ds/dt
        return {{s}, {st / kSqrt2}, {st / kSqrt2}, {-std::sin(2.0 * t)}};
      });
}

std::shared_ptr<Model2D> make_burgers2d_coupled_source() {
  const double pi = M_PI;
  return std::make_shared<ScalarModel2D>(
      [](double u) { return 0.25 * kSqrt2 * u * u; }, [](double u) { return u / kSqrt2; },
      [](double u) { return 0.25 * kSqrt2 * u * u; }, [](double u) { return u / kSqrt2; },
      [pi](double u, double x, double y, double v, double w, double z) -> SourceEval2D {
        // s = -pi cos(pi t) u with t = (x+y)/sqrt(2); total derivatives by the
        // chain rule through both t and u.
        const double t = (x + y) / kSqrt2;
        const double c = std::cos(pi * t), sn = std::sin(pi * t);
        const double ct = pi * sn / kSqrt2;       // d/dx (-cos(pi t)) / pi ... folded below
        const double s = -pi * c * u;
        const double sx = pi * (sn * pi / kSqrt2) * u - pi * c * v;
        const double sy = pi * (sn * pi / kSqrt2) * u - pi * c * w;
        const double sxy = pi * pi / kSqrt2 * (c * pi / kSqrt2 * u + sn * v) + pi * ct * w -
                           pi * c * z;
        return {{s}, {sx}, {sy}, {sxy}};
      });
}

std::shared_ptr<Model2D> make_burgers2d_shear() {
  return std::make_shared<ScalarModel2D>(
      [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
      [](double u) { return u; }, [](double) { return 1.0; });
}

// --- Shallow water ----------------------------------------------------------

double swe_bottom(double x) {
  const double d = x - 5.0;
  return 5.0 * std::exp(-0.4 * d * d);
}

double swe_bottom_dx(double x) {
  const double d = x - 5.0;
  return -4.0 * d * std::exp(-0.4 * d * d);
}

namespace {

double swe_bottom_dxx(double x) {
  const double d = x - 5.0;
  return (-4.0 + 3.2 * d * d) * std::exp(-0.4 * d * d);
}

class ShallowWaterModel final : public Model1D {
 public:
  explicit ShallowWaterModel(double gravity) : g_(gravity) {}

  int components() const override { return 2; }
  StateVec flux(const StateVec& u) const override {
    const double h = u[0], m = u[1];
    return {m, m * m / h + 0.5 * g_ * h * h};
  }
  StateMat jacobian(const StateVec& u) const override {
    const double h = u[0], vel = u[1] / u[0];
    StateMat j(2);
    j(0, 0) = 0.0;
    j(0, 1) = 1.0;
    j(1, 0) = g_ * h - vel * vel;
    j(1, 1) = 2.0 * vel;
    return j;
  }
  EigenSystem eigensystem(const StateVec& u) const override {
    const double h = u[0];
    if (!(h > 0.0)) throw UnphysicalStateError("shallow water: non-positive depth");
    const double vel = u[1] / h;
    const double c = std::sqrt(g_ * h);
    EigenSystem es;
    es.lambda = {vel - c, vel + c};
    es.right = StateMat(2);
    es.right(0, 0) = 1.0;
    es.right(0, 1) = 1.0;
    es.right(1, 0) = vel - c;
    es.right(1, 1) = vel + c;
    es.left = StateMat(2);
    const double ic = 0.5 / c;
    es.left(0, 0) = (vel + c) * ic;
    es.left(0, 1) = -ic;
    es.left(1, 0) = -(vel - c) * ic;
    es.left(1, 1) = ic;
    return es;
  }
  bool has_source() const override { return true; }
  SourceEval1D source(const StateVec& u, double x, const StateVec& v) const override {
    const double h = u[0];
    const double bx = swe_bottom_dx(x), bxx = swe_bottom_dxx(x);
    return {{0.0, -g_ * h * bx}, {0.0, -g_ * (v[0] * bx + h * bxx)}};
  }

 private:
  double g_;
};

}  // namespace

std::shared_ptr<Model1D> make_shallow_water(double gravity) {
  return std::make_shared<ShallowWaterModel>(gravity);
}

// --- Nozzle Euler flow ------------------------------------------------------

namespace {

constexpr double kDelta0 = 0.5 * (kGamma - 1.0);                    // 0.2
constexpr double kP0 = 0.5 * (kGamma + 1.0) / (kGamma - 1.0);       // 3.0

double nozzle_flow_function_d(double w) {
  // f'(w) with f(w) = w (1 + d0 w^2)^(-p0)
  const double b = 1.0 + kDelta0 * w * w;
  return std::pow(b, -kP0 - 1.0) * (1.0 + kDelta0 * (1.0 - 2.0 * kP0) * w * w);
}

double nozzle_flow_function_dd(double w) {
  const double b = 1.0 + kDelta0 * w * w;
  return -2.0 * kDelta0 * kP0 * w * std::pow(b, -kP0 - 2.0) *
         (3.0 + kDelta0 * (1.0 - 2.0 * kP0) * w * w);
}

class NozzleEulerModel final : public Model1D {
 public:
  int components() const override { return 3; }

  StateVec flux(const StateVec& u) const override {
    const double rho = u[0], m = u[1], e = u[2];
    const double vel = m / rho;
    const double p = pressure(rho, m, e);
    return {m, m * vel + p, vel * (e + p)};
  }

  StateMat jacobian(const StateVec& u) const override {
    const double rho = u[0], m = u[1], e = u[2];
    const double vel = m / rho;
    const double h = (e + pressure(rho, m, e)) / rho;
    StateMat j(3);
    j(0, 0) = 0.0;
    j(0, 1) = 1.0;
    j(0, 2) = 0.0;
    j(1, 0) = 0.5 * (kGamma - 3.0) * vel * vel;
    j(1, 1) = (3.0 - kGamma) * vel;
    j(1, 2) = kGamma - 1.0;
    j(2, 0) = vel * (0.5 * (kGamma - 1.0) * vel * vel - h);
    j(2, 1) = h - (kGamma - 1.0) * vel * vel;
    j(2, 2) = kGamma * vel;
    return j;
  }

  EigenSystem eigensystem(const StateVec& u) const override {
    const double rho = u[0], m = u[1], e = u[2];
    const double p = pressure(rho, m, e);
    if (!(rho > 0.0) || !(p > 0.0))
      throw UnphysicalStateError("nozzle euler: non-positive density or pressure");
    const double vel = m / rho;
    const double c = std::sqrt(kGamma * p / rho);
    const double h = (e + p) / rho;
    EigenSystem es;
    es.lambda = {vel - c, vel, vel + c};
    es.right = StateMat(3);
    es.right(0, 0) = 1.0;          es.right(0, 1) = 1.0;             es.right(0, 2) = 1.0;
    es.right(1, 0) = vel - c;      es.right(1, 1) = vel;             es.right(1, 2) = vel + c;
    es.right(2, 0) = h - vel * c;  es.right(2, 1) = 0.5 * vel * vel; es.right(2, 2) = h + vel * c;
    const double b1 = (kGamma - 1.0) / (c * c);
    const double b2 = 0.5 * b1 * vel * vel;
    es.left = StateMat(3);
    es.left(0, 0) = 0.5 * (b2 + vel / c);
    es.left(0, 1) = -0.5 * (b1 * vel + 1.0 / c);
    es.left(0, 2) = 0.5 * b1;
    es.left(1, 0) = 1.0 - b2;
    es.left(1, 1) = b1 * vel;
    es.left(1, 2) = -b1;
    es.left(2, 0) = 0.5 * (b2 - vel / c);
    es.left(2, 1) = -0.5 * (b1 * vel - 1.0 / c);
    es.left(2, 2) = 0.5 * b1;
    return es;
  }

  bool has_source() const override { return true; }

  SourceEval1D source(const StateVec& u, double x, const StateVec& v) const override {
    const double rho = u[0], m = u[1], e = u[2];
    const double p = pressure(rho, m, e);
    const double a = nozzle_area_log_derivative(x);
    const double ax = nozzle_area_log_derivative_dx(x);
    // q(U) = (m, m^2/rho, u(E+p)); s = -a q
    const double q0 = m;
    const double q1 = m * m / rho;
    const double q2 = m / rho * (e + p);
    // dq/dU rows (third one written via gamma E m / rho - (g-1) m^3 / (2 rho^2))
    const double dq1_r = -m * m / (rho * rho);
    const double dq1_m = 2.0 * m / rho;
    const double dq2_r = -kGamma * e * m / (rho * rho) + (kGamma - 1.0) * m * m * m /
                                                             (rho * rho * rho);
    const double dq2_m = kGamma * e / rho - 1.5 * (kGamma - 1.0) * m * m / (rho * rho);
    const double dq2_e = kGamma * m / rho;
    const double dq0 = v[1];
    const double dq1 = dq1_r * v[0] + dq1_m * v[1];
    const double dq2 = dq2_r * v[0] + dq2_m * v[1] + dq2_e * v[2];
    return {{-a * q0, -a * q1, -a * q2},
            {-ax * q0 - a * dq0, -ax * q1 - a * dq1, -ax * q2 - a * dq2}};
  }

 private:
  static double pressure(double rho, double m, double e) {
    return (kGamma - 1.0) * (e - 0.5 * m * m / rho);
  }
};

}  // namespace

double nozzle_flow_function(double mach) {
  return mach * std::pow(1.0 + kDelta0 * mach * mach, -kP0);
}

namespace {

// Linear Mach ramps on each side of the standing shock: 0.8 -> 1.3 ahead of
// x = 0.5, then from the post-shock Mach back up to 1.8 at x = 1. The duct
// area follows A f(M) = const per branch, so the initial profile solves the
// steady equations exactly on both sides of the shock.
struct MachRamp {
  double m2, slope;
  MachRamp() {
    m2 = std::sqrt((1.0 + kDelta0 * 1.3 * 1.3) / (kGamma * 1.3 * 1.3 - kDelta0));
    slope = (1.8 - m2) / 0.5;
  }
};
const MachRamp& mach_ramp() {
  static const MachRamp r;
  return r;
}

}  // namespace

double nozzle_mach_profile(double x) {
  if (x < 0.5) return 0.8 + x;
  return mach_ramp().m2 + mach_ramp().slope * (x - 0.5);
}

double nozzle_area_log_derivative(double x) {
  // A = C / f(M(x))  =>  A'/A = -f'(M) M' / f(M)
  const double mach = nozzle_mach_profile(x);
  const double mprime = x < 0.5 ? 1.0 : mach_ramp().slope;
  return -mprime * nozzle_flow_function_d(mach) / nozzle_flow_function(mach);
}

double nozzle_area_log_derivative_dx(double x) {
  const double mach = nozzle_mach_profile(x);
  const double mprime = x < 0.5 ? 1.0 : mach_ramp().slope;
  const double f = nozzle_flow_function(mach);
  const double fd = nozzle_flow_function_d(mach);
  const double fdd = nozzle_flow_function_dd(mach);
  return -mprime * mprime * (fdd * f - fd * fd) / (f * f);
}

StateVec nozzle_isentropic_state(double mach, double rho0, double p0) {
  const double b = 1.0 + kDelta0 * mach * mach;
  const double rho = rho0 * std::pow(b, -1.0 / (kGamma - 1.0));
  const double p = p0 * std::pow(b, -kGamma / (kGamma - 1.0));
  const double c = std::sqrt(kGamma * p / rho);
  const double vel = mach * c;
  return {rho, rho * vel, p / (kGamma - 1.0) + 0.5 * rho * vel * vel};
}

void nozzle_normal_shock(double m1, double rho0, double p0, double& m2, double& rho02,
                         double& p02) {
  m2 = std::sqrt((1.0 + kDelta0 * m1 * m1) / (kGamma * m1 * m1 - kDelta0));
  const StateVec pre = nozzle_isentropic_state(m1, rho0, p0);
  const double p1 = (kGamma - 1.0) * (pre[2] - 0.5 * pre[1] * pre[1] / pre[0]);
  const double p2 = p1 * (1.0 + 2.0 * kGamma / (kGamma + 1.0) * (m1 * m1 - 1.0));
  const double rho2 = pre[0] * (kGamma + 1.0) * m1 * m1 / ((kGamma - 1.0) * m1 * m1 + 2.0);
  const double b2 = 1.0 + kDelta0 * m2 * m2;
  p02 = p2 * std::pow(b2, kGamma / (kGamma - 1.0));
  rho02 = rho2 * std::pow(b2, 1.0 / (kGamma - 1.0));
}

std::shared_ptr<Model1D> make_nozzle_euler() { return std::make_shared<NozzleEulerModel>(); }

// --- Cauchy-Riemann ---------------------------------------------------------

namespace {

class CauchyRiemannModel final : public Model2D {
 public:
  int components() const override { return 2; }

  StateVec flux_x(const StateVec& u, double x, double) const override {
    // (-x I + A) W with A = diag(1, -1)
    return {(1.0 - x) * u[0], (-1.0 - x) * u[1]};
  }
  StateVec flux_y(const StateVec& u, double, double y) const override {
    // (-y I + B) W with B the exchange matrix
    return {-y * u[0] + u[1], u[0] - y * u[1]};
  }
  StateMat jacobian_x(const StateVec&, double x, double) const override {
    StateMat j(2);
    j(0, 0) = 1.0 - x;
    j(1, 1) = -1.0 - x;
    return j;
  }
  StateMat jacobian_y(const StateVec&, double, double y) const override {
    StateMat j(2);
    j(0, 0) = -y;
    j(0, 1) = 1.0;
    j(1, 0) = 1.0;
    j(1, 1) = -y;
    return j;
  }
  EigenSystem eigensystem_x(const StateVec&, double x, double) const override {
    EigenSystem es;
    es.lambda = {1.0 - x, -1.0 - x};
    es.left = StateMat::identity(2);
    es.right = StateMat::identity(2);
    return es;
  }
  EigenSystem eigensystem_y(const StateVec&, double, double y) const override {
    EigenSystem es;
    es.lambda = {1.0 - y, -1.0 - y};
    const double r = 1.0 / kSqrt2;
    StateMat m(2);
    m(0, 0) = r;  m(0, 1) = r;
    m(1, 0) = r;  m(1, 1) = -r;
    es.left = m;   // orthogonal and symmetric, so L = R
    es.right = m;
    return es;
  }
  bool has_source() const override { return true; }
  SourceEval2D source(const StateVec& u, double, double, const StateVec& v, const StateVec& w,
                      const StateVec& z) const override {
    return {-2.0 * u, -2.0 * v, -2.0 * w, -2.0 * z};
  }
};

// --- 2D Euler ----------------------------------------------------------------

class Euler2DModel final : public Model2D {
 public:
  int components() const override { return 4; }

  StateVec flux_x(const StateVec& u, double, double) const override {
    const double rho = u[0], mx = u[1], my = u[2], e = u[3];
    const double vx = mx / rho;
    const double p = pressure(u);
    return {mx, mx * vx + p, my * vx, vx * (e + p)};
  }
  StateVec flux_y(const StateVec& u, double, double) const override {
    const double rho = u[0], mx = u[1], my = u[2], e = u[3];
    const double vy = my / rho;
    const double p = pressure(u);
    return {my, mx * vy, my * vy + p, vy * (e + p)};
  }
  StateMat jacobian_x(const StateVec& u, double, double) const override {
    const double rho = u[0], vx = u[1] / rho, vy = u[2] / rho;
    const double q2 = vx * vx + vy * vy;
    const double h = (u[3] + pressure(u)) / rho;
    const double gm = kGamma - 1.0;
    StateMat j(4);
    j(0, 1) = 1.0;
    j(1, 0) = 0.5 * gm * q2 - vx * vx;
    j(1, 1) = (3.0 - kGamma) * vx;
    j(1, 2) = -gm * vy;
    j(1, 3) = gm;
    j(2, 0) = -vx * vy;
    j(2, 1) = vy;
    j(2, 2) = vx;
    j(3, 0) = vx * (0.5 * gm * q2 - h);
    j(3, 1) = h - gm * vx * vx;
    j(3, 2) = -gm * vx * vy;
    j(3, 3) = kGamma * vx;
    return j;
  }
  StateMat jacobian_y(const StateVec& u, double, double) const override {
    const double rho = u[0], vx = u[1] / rho, vy = u[2] / rho;
    const double q2 = vx * vx + vy * vy;
    const double h = (u[3] + pressure(u)) / rho;
    const double gm = kGamma - 1.0;
    StateMat j(4);
    j(0, 2) = 1.0;
    j(1, 0) = -vx * vy;
    j(1, 1) = vy;
    j(1, 2) = vx;
    j(2, 0) = 0.5 * gm * q2 - vy * vy;
    j(2, 1) = -gm * vx;
    j(2, 2) = (3.0 - kGamma) * vy;
    j(2, 3) = gm;
    j(3, 0) = vy * (0.5 * gm * q2 - h);
    j(3, 1) = -gm * vx * vy;
    j(3, 2) = h - gm * vy * vy;
    j(3, 3) = kGamma * vy;
    return j;
  }
  EigenSystem eigensystem_x(const StateVec& u, double, double) const override {
    const double rho = u[0], vx = u[1] / rho, vy = u[2] / rho, e = u[3];
    const double p = pressure(u);
    if (!(rho > 0.0) || !(p > 0.0))
      throw UnphysicalStateError("euler2d: non-positive density or pressure");
    const double c = std::sqrt(kGamma * p / rho);
    const double h = (e + p) / rho;
    const double q2 = vx * vx + vy * vy;
    EigenSystem es;
    es.lambda = {vx - c, vx, vx, vx + c};
    StateMat& r = es.right = StateMat(4);
    r(0, 0) = 1.0;          r(0, 1) = 1.0;      r(0, 2) = 0.0; r(0, 3) = 1.0;
    r(1, 0) = vx - c;       r(1, 1) = vx;       r(1, 2) = 0.0; r(1, 3) = vx + c;
    r(2, 0) = vy;           r(2, 1) = vy;       r(2, 2) = 1.0; r(2, 3) = vy;
    r(3, 0) = h - vx * c;   r(3, 1) = 0.5 * q2; r(3, 2) = vy;  r(3, 3) = h + vx * c;
    const double b1 = (kGamma - 1.0) / (c * c);
    const double b2 = 0.5 * b1 * q2;
    StateMat& l = es.left = StateMat(4);
    l(0, 0) = 0.5 * (b2 + vx / c);
    l(0, 1) = -0.5 * (b1 * vx + 1.0 / c);
    l(0, 2) = -0.5 * b1 * vy;
    l(0, 3) = 0.5 * b1;
    l(1, 0) = 1.0 - b2;
    l(1, 1) = b1 * vx;
    l(1, 2) = b1 * vy;
    l(1, 3) = -b1;
    l(2, 0) = -vy;
    l(2, 2) = 1.0;
    l(3, 0) = 0.5 * (b2 - vx / c);
    l(3, 1) = -0.5 * (b1 * vx - 1.0 / c);
    l(3, 2) = -0.5 * b1 * vy;
    l(3, 3) = 0.5 * b1;
    return es;
  }
  EigenSystem eigensystem_y(const StateVec& u, double, double) const override {
    const double rho = u[0], vx = u[1] / rho, vy = u[2] / rho, e = u[3];
    const double p = pressure(u);
    if (!(rho > 0.0) || !(p > 0.0))
      throw UnphysicalStateError("euler2d: non-positive density or pressure");
    const double c = std::sqrt(kGamma * p / rho);
    const double h = (e + p) / rho;
    const double q2 = vx * vx + vy * vy;
    EigenSystem es;
    es.lambda = {vy - c, vy, vy, vy + c};
    StateMat& r = es.right = StateMat(4);
    r(0, 0) = 1.0;          r(0, 1) = 1.0;      r(0, 2) = 0.0; r(0, 3) = 1.0;
    r(1, 0) = vx;           r(1, 1) = vx;       r(1, 2) = 1.0; r(1, 3) = vx;
    r(2, 0) = vy - c;       r(2, 1) = vy;       r(2, 2) = 0.0; r(2, 3) = vy + c;
    r(3, 0) = h - vy * c;   r(3, 1) = 0.5 * q2; r(3, 2) = vx;  r(3, 3) = h + vy * c;
    const double b1 = (kGamma - 1.0) / (c * c);
    const double b2 = 0.5 * b1 * q2;
    StateMat& l = es.left = StateMat(4);
    l(0, 0) = 0.5 * (b2 + vy / c);
    l(0, 1) = -0.5 * b1 * vx;
    l(0, 2) = -0.5 * (b1 * vy + 1.0 / c);
    l(0, 3) = 0.5 * b1;
    l(1, 0) = 1.0 - b2;
    l(1, 1) = b1 * vx;
    l(1, 2) = b1 * vy;
    l(1, 3) = -b1;
    l(2, 0) = -vx;
    l(2, 1) = 1.0;
    l(3, 0) = 0.5 * (b2 - vy / c);
    l(3, 1) = -0.5 * b1 * vx;
    l(3, 2) = -0.5 * (b1 * vy - 1.0 / c);
    l(3, 3) = 0.5 * b1;
    return es;
  }

 private:
  static double pressure(const StateVec& u) {
    return (kGamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
  }
};

}  // namespace

std::shared_ptr<Model2D> make_cauchy_riemann() { return std::make_shared<CauchyRiemannModel>(); }

std::shared_ptr<Model2D> make_euler2d() { return std::make_shared<Euler2DModel>(); }

StateVec euler2d_conserved(double rho, double u, double v, double p) {
  return {rho, rho * u, rho * v, p / (kGamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

}  // namespace rdh
