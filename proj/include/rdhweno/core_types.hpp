#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rdh {

/// Largest component count among the supported systems (2D Euler).
inline constexpr int kMaxComponents = 4;

/// Thrown by models when an evaluation leaves the hyperbolic regime
/// (negative density/pressure, dry shallow-water state, ...).
class UnphysicalStateError : public std::runtime_error {
 public:
  explicit UnphysicalStateError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a pseudo-time iteration produces a non-finite field.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long iteration)
      : std::runtime_error(what), iteration(iteration) {}
  long iteration;
};

/// Fixed-capacity state vector (one value per conserved component).
class StateVec {
 public:
  StateVec() : n_(0), a_{} {}
  explicit StateVec(int n, double fill = 0.0) : n_(n) {
    assert(n >= 0 && n <= kMaxComponents);
    a_.fill(0.0);
    for (int i = 0; i < n_; ++i) a_[i] = fill;
  }
  StateVec(std::initializer_list<double> xs) : n_(static_cast<int>(xs.size())) {
    assert(n_ <= kMaxComponents);
    a_.fill(0.0);
    int i = 0;
    for (double x : xs) a_[i++] = x;
  }

  int size() const { return n_; }
  double& operator[](int i) { assert(i >= 0 && i < n_); return a_[i]; }
  double operator[](int i) const { assert(i >= 0 && i < n_); return a_[i]; }

  StateVec& operator+=(const StateVec& o) {
    assert(o.n_ == n_);
    for (int i = 0; i < n_; ++i) a_[i] += o.a_[i];
    return *this;
  }
  StateVec& operator-=(const StateVec& o) {
    assert(o.n_ == n_);
    for (int i = 0; i < n_; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  StateVec& operator*=(double c) {
    for (int i = 0; i < n_; ++i) a_[i] *= c;
    return *this;
  }

  friend StateVec operator+(StateVec a, const StateVec& b) { return a += b; }
  friend StateVec operator-(StateVec a, const StateVec& b) { return a -= b; }
  friend StateVec operator*(double c, StateVec a) { return a *= c; }
  friend StateVec operator*(StateVec a, double c) { return a *= c; }

  bool finite() const {
    for (int i = 0; i < n_; ++i)
      if (!std::isfinite(a_[i])) return false;
    return true;
  }
  double abs_sum() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += std::abs(a_[i]);
    return s;
  }

 private:
  int n_;
  std::array<double, kMaxComponents> a_;
};

/// Fixed-capacity square matrix (row-major).
class StateMat {
 public:
  StateMat() : n_(0), a_{} {}
  explicit StateMat(int n, double fill = 0.0) : n_(n) {
    assert(n >= 0 && n <= kMaxComponents);
    a_.fill(fill);
  }
  static StateMat identity(int n) {
    StateMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int size() const { return n_; }
  double& operator()(int i, int j) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return a_[i * kMaxComponents + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return a_[i * kMaxComponents + j];
  }

  StateVec operator*(const StateVec& x) const {
    assert(x.size() == n_);
    StateVec y(n_);
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }
  StateMat operator*(const StateMat& b) const {
    assert(b.n_ == n_);
    StateMat c(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const double aik = (*this)(i, k);
        for (int j = 0; j < n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  int n_;
  std::array<double, kMaxComponents * kMaxComponents> a_;
};

/// Characteristic decomposition of a flux Jacobian: jacobian = R diag(lambda) L
/// with L R = I.
struct EigenSystem {
  StateVec lambda;
  StateMat left;
  StateMat right;
};

}  // namespace rdh
