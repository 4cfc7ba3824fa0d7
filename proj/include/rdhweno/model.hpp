#pragma once

/// Physics layer: conservation-law models behind a uniform interface.
///
/// A model supplies fluxes, flux Jacobians, characteristic eigensystems and
/// (optionally) a source term with its total spatial derivatives, where
/// "total" means the chain rule through the solution is applied internally:
/// the caller passes the carried derivative fields and receives
/// d/dx s(u(x),x) = (ds/du) v + ds/dx evaluated in closed form.
///
/// Models are immutable after construction and all evaluations are pure;
/// they may be shared across threads freely.

#include "rdhweno/core_types.hpp"

#include <memory>

namespace rdh {

/// Source value and its total x-derivative at one 1D node.
struct SourceEval1D {
  StateVec s;
  StateVec s_total_x;
};

class Model1D {
 public:
  virtual ~Model1D() = default;

  virtual int components() const = 0;
  virtual StateVec flux(const StateVec& u) const = 0;
  virtual StateMat jacobian(const StateVec& u) const = 0;
  /// jacobian(u) = right * diag(lambda) * left with left * right = I.
  virtual EigenSystem eigensystem(const StateVec& u) const = 0;

  virtual bool has_source() const { return false; }
  /// Source at (u, x) with the carried derivative v = du/dx.
  virtual SourceEval1D source(const StateVec& u, double x, const StateVec& v) const {
    (void)x;
    (void)v;
    return {StateVec(u.size()), StateVec(u.size())};
  }
};

/// Source value and its total x-, y- and xy-derivatives at one 2D node.
struct SourceEval2D {
  StateVec s;
  StateVec s_x;
  StateVec s_y;
  StateVec s_xy;
};

/// 2D models receive the node position everywhere so that fluxes may depend
/// on space (the self-similar Cauchy-Riemann system does); models without
/// position dependence ignore the arguments.
class Model2D {
 public:
  virtual ~Model2D() = default;

  virtual int components() const = 0;
  virtual StateVec flux_x(const StateVec& u, double x, double y) const = 0;
  virtual StateVec flux_y(const StateVec& u, double x, double y) const = 0;
  virtual StateMat jacobian_x(const StateVec& u, double x, double y) const = 0;
  virtual StateMat jacobian_y(const StateVec& u, double x, double y) const = 0;
  virtual EigenSystem eigensystem_x(const StateVec& u, double x, double y) const = 0;
  virtual EigenSystem eigensystem_y(const StateVec& u, double x, double y) const = 0;

  virtual bool has_source() const { return false; }
  /// Source at (u, x, y) with carried derivatives v = u_x, w = u_y, z = u_xy.
  virtual SourceEval2D source(const StateVec& u, double x, double y, const StateVec& v,
                              const StateVec& w, const StateVec& z) const {
    (void)x; (void)y; (void)v; (void)w; (void)z;
    const int m = u.size();
    return {StateVec(m), StateVec(m), StateVec(m), StateVec(m)};
  }
};

/// Arithmetic-mean interval state.
inline StateVec average_state_1d(const StateVec& ul, const StateVec& ur) {
  return 0.5 * (ul + ur);
}

/// Arithmetic-mean cell state over the four corners.
inline StateVec average_state_2d(const std::array<StateVec, 4>& corners) {
  return 0.25 * (corners[0] + corners[1] + corners[2] + corners[3]);
}

}  // namespace rdh
