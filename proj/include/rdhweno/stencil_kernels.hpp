#pragma once

/// Hermite WENO stencil kernels.
///
/// Two pure operators on raw value/derivative windows of a uniform grid:
///
///   * sixth-order interval integration: given s at the four nodes
///     x_{i-1}..x_{i+2} and s' at x_i, x_{i+1}, approximate the integral of
///     s over [x_i, x_{i+1}] to O(dx^7) on smooth data, degrading gracefully
///     (ENO selection) across discontinuities;
///
///   * fourth-order derivative reconstruction: given u at x_{i-1}..x_{i+1}
///     and u' at x_{i-1}, x_{i+1}, approximate u'(x_i) to O(dx^4).
///
/// Both follow the candidate / smoothness-indicator / nonlinear-weight
/// pattern with three small-stencil candidates whose linear combination
/// reproduces the large Hermite stencil. The kernels know nothing about
/// grids or physics; callers feed flux, source, or solution windows from
/// any direction and may do so concurrently (no shared state).

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rdh {

/// Window for the sixth-order interval integration over [x_i, x_{i+1}]:
/// values at x_{i-1}, x_i, x_{i+1}, x_{i+2} and derivatives at x_i, x_{i+1}.
struct HermiteIntegrationStencil {
  std::array<double, 4> values;
  std::array<double, 2> derivs;
  double dx;
};

/// Window for the fourth-order derivative reconstruction at x_i:
/// u at x_{i-1}, x_i, x_{i+1} and u' at x_{i-1}, x_{i+1}.
struct HermiteReconstructionStencil {
  std::array<double, 3> u;
  std::array<double, 2> v;
  double dx;
};

/// Regularizer and linear weights for both kernels. The gamma triples are
/// fixed by the Hermite linear-weight identities; the integer identities
/// below pin them exactly (11/30 + 11/30 + 4/15 = 1, 1/4 + 1/4 + 1/2 = 1).
struct WeightConfig {
  double epsilon = 1e-10;
  std::array<double, 3> gamma_int{11.0 / 30.0, 11.0 / 30.0, 4.0 / 15.0};
  std::array<double, 3> gamma_rec{1.0 / 4.0, 1.0 / 4.0, 1.0 / 2.0};
};
static_assert(11 * 1 + 11 * 1 + 4 * 2 == 30, "integration weights must sum to 1");
static_assert(1 * 1 + 1 * 1 + 2 * 1 == 4, "reconstruction weights must sum to 1");

/// Candidate integrals (q0, q1, q2, q3) of the Hermite interpolants over
/// [x_i, x_{i+1}]: q0 from the degree-5 large-stencil interpolant, q1/q2
/// from the left/right cubic Hermite candidates, q3 from the four-point
/// cubic. Satisfies q0 = (11/30) q1 + (11/30) q2 + (4/15) q3 identically.
inline std::array<double, 4> candidate_integrals(const HermiteIntegrationStencil& st) {
  const double sm1 = st.values[0], s0 = st.values[1], s1 = st.values[2], s2 = st.values[3];
  const double d0 = st.derivs[0], d1 = st.derivs[1];
  const double dx = st.dx;
  const double q0 =
      dx / 240.0 * (sm1 + 119.0 * s0 + 119.0 * s1 + s2 + 22.0 * dx * d0 - 22.0 * dx * d1);
  const double q1 = dx / 24.0 * (sm1 + 16.0 * s0 + 7.0 * s1 + 6.0 * dx * d0);
  const double q2 = dx / 24.0 * (7.0 * s0 + 16.0 * s1 + s2 - 6.0 * dx * d1);
  const double q3 = dx / 24.0 * (-sm1 + 13.0 * s0 + 13.0 * s1 - s2);
  return {q0, q1, q2, q3};
}

/// Smoothness indicators (beta1, beta2, beta3) of the three integration
/// candidates over [x_i, x_{i+1}]: scaled L2 norms of all derivatives of
/// each cubic. Zero exactly on constants; (b dx)^2 on linear data of
/// slope b.
inline std::array<double, 3> integration_smoothness(const HermiteIntegrationStencil& st) {
  const double sm1 = st.values[0], s0 = st.values[1], s1 = st.values[2], s2 = st.values[3];
  const double dd0 = st.dx * st.derivs[0], dd1 = st.dx * st.derivs[1];

  const double t11 = sm1 + (65.0 / 602.0) * s0 - (667.0 / 602.0) * s1 + (1269.0 / 602.0) * dd0;
  const double t12 = s0 - s1 + (10153.0 / 12561.0) * dd0;
  const double b1 = (301.0 / 30.0) * t11 * t11 + (12561.0 / 2408.0) * t12 * t12 +
                    (10153.0 / 12561.0) * dd0 * dd0;

  const double t21 = -(667.0 / 602.0) * s0 + (65.0 / 602.0) * s1 + s2 - (1269.0 / 602.0) * dd1;
  const double t22 = -s0 + s1 - (10153.0 / 12561.0) * dd1;
  const double b2 = (301.0 / 30.0) * t21 * t21 + (12561.0 / 2408.0) * t22 * t22 +
                    (10153.0 / 12561.0) * dd1 * dd1;

  const double t31 = sm1 - (1269.0 / 488.0) * s0 + (537.0 / 244.0) * s1 - (293.0 / 488.0) * s2;
  const double t32 = s0 - (32018.0 / 21865.0) * s1 + (10153.0 / 21865.0) * s2;
  const double t33 = s1 - s2;
  const double b3 = (61.0 / 45.0) * t31 * t31 + (21865.0 / 11712.0) * t32 * t32 +
                    (10153.0 / 21865.0) * t33 * t33;

  return {b1, b2, b3};
}

/// Nonlinear weights w_l = (g_l/(eps+beta_l)^2) / sum_m (g_m/(eps+beta_m)^2).
/// A convex combination: each w_l in [0,1], sum = 1. Equal betas reproduce
/// the linear weights exactly.
inline std::array<double, 3> nonlinear_weights(const std::array<double, 3>& gamma,
                                               const std::array<double, 3>& beta,
                                               double epsilon) {
  assert(epsilon > 0.0);
  std::array<double, 3> w;
  double sum = 0.0;
  for (int l = 0; l < 3; ++l) {
    const double d = epsilon + beta[l];
    w[l] = gamma[l] / (d * d);
    sum += w[l];
  }
  for (int l = 0; l < 3; ++l) w[l] /= sum;
  return w;
}

/// Sixth-order HWENO approximation of the integral of s over [x_i, x_{i+1}].
/// Exact on polynomials of degree <= 3 sampled with matching derivatives
/// (every candidate is), O(dx^7) per interval on smooth data.
inline double hweno6_integrate(const HermiteIntegrationStencil& st,
                               const WeightConfig& cfg = {}) {
  const auto q = candidate_integrals(st);
  const auto beta = integration_smoothness(st);
  const auto w = nonlinear_weights(cfg.gamma_int, beta, cfg.epsilon);
  return w[0] * q[1] + w[1] * q[2] + w[2] * q[3];
}

/// Candidate derivative values (P0', P1', P2', P3') at x_i of the Hermite
/// reconstruction interpolants: P0 is the degree-4 large-stencil
/// interpolant, P1/P2 the one-sided quadratic Hermite candidates, P3 the
/// three-point quadratic. Satisfies P0' = (1/4)P1' + (1/4)P2' + (1/2)P3'.
inline std::array<double, 4> hweno4_candidate_derivatives(
    const HermiteReconstructionStencil& st) {
  const double um1 = st.u[0], u0 = st.u[1], up1 = st.u[2];
  const double vm1 = st.v[0], vp1 = st.v[1];
  const double dx = st.dx;
  const double p1 = -vm1 + 2.0 * (u0 - um1) / dx;
  const double p2 = -vp1 + 2.0 * (up1 - u0) / dx;
  const double p3 = (up1 - um1) / (2.0 * dx);
  const double p0 = -(vm1 + vp1) / 4.0 + 3.0 * (up1 - um1) / (4.0 * dx);
  return {p0, p1, p2, p3};
}

/// Smoothness indicators of the three reconstruction candidates over the
/// control volume [x_i - dx/2, x_i + dx/2].
inline std::array<double, 3> reconstruction_smoothness(
    const HermiteReconstructionStencil& st) {
  const double um1 = st.u[0], u0 = st.u[1], up1 = st.u[2];
  const double vm1 = st.v[0], vp1 = st.v[1];
  const double dx = st.dx;
  const double t1a = 2.0 * u0 - 2.0 * um1 - vm1 * dx;
  const double t1b = u0 - um1 - vm1 * dx;
  const double t2a = 2.0 * up1 - 2.0 * u0 - vp1 * dx;
  const double t2b = up1 - u0 - vp1 * dx;
  const double t3a = up1 - um1;
  const double t3b = um1 - 2.0 * u0 + up1;
  return {t1a * t1a + (13.0 / 3.0) * t1b * t1b,
          t2a * t2a + (13.0 / 3.0) * t2b * t2b,
          0.25 * t3a * t3a + (13.0 / 12.0) * t3b * t3b};
}

/// Fourth-order HWENO approximation of u'(x_i). Exact on polynomials of
/// degree <= 2 sampled with matching derivatives, O(dx^4) on smooth data.
inline double hweno4_derivative(const HermiteReconstructionStencil& st,
                                const WeightConfig& cfg = {}) {
  const auto p = hweno4_candidate_derivatives(st);
  const auto beta = reconstruction_smoothness(st);
  const auto w = nonlinear_weights(cfg.gamma_rec, beta, cfg.epsilon);
  return w[0] * p[1] + w[1] * p[2] + w[2] * p[3];
}

}  // namespace rdh
