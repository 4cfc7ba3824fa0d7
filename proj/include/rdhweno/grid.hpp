#pragma once

/// Uniform node-centered grids with a one-node ghost frame, and the nodal
/// solution containers carrying the point values together with the spatial
/// derivative fields the Hermite kernels consume (v in 1D; v, w, z in 2D).

#include "rdhweno/core_types.hpp"

#include <vector>

namespace rdh {

struct Grid1D {
  double x0 = 0.0;
  double x1 = 1.0;
  int cells = 0;  // nodes 0..cells

  double dx() const { return (x1 - x0) / cells; }
  int nodes() const { return cells + 1; }
  double x(int i) const { return x0 + i * dx(); }
};

/// Vector field on grid nodes, index range i in [-1, cells+1].
class NodalField1D {
 public:
  NodalField1D() = default;
  NodalField1D(int cells, int m) : cells_(cells), m_(m), d_((cells + 3) * m, 0.0) {}

  int components() const { return m_; }
  double& at(int i, int c) { return d_[static_cast<size_t>(i + 1) * m_ + c]; }
  double at(int i, int c) const { return d_[static_cast<size_t>(i + 1) * m_ + c]; }

  StateVec state(int i) const {
    StateVec s(m_);
    for (int c = 0; c < m_; ++c) s[c] = at(i, c);
    return s;
  }
  void set_state(int i, const StateVec& s) {
    for (int c = 0; c < m_; ++c) at(i, c) = s[c];
  }

  bool finite_interior(int cells) const {
    for (int i = 0; i <= cells; ++i)
      for (int c = 0; c < m_; ++c)
        if (!std::isfinite(at(i, c))) return false;
    return true;
  }

 private:
  int cells_ = 0;
  int m_ = 0;
  std::vector<double> d_;
};

struct Solution1D {
  Grid1D grid;
  NodalField1D u;  // point values
  NodalField1D v;  // carried spatial derivative u_x

  Solution1D() = default;
  Solution1D(const Grid1D& g, int m) : grid(g), u(g.cells, m), v(g.cells, m) {}
  int components() const { return u.components(); }
};

struct Grid2D {
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  int nx = 0, ny = 0;  // cells per direction; nodes (nx+1) x (ny+1)

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  double x(int i) const { return x0 + i * dx(); }
  double y(int j) const { return y0 + j * dy(); }
};

/// Vector field on 2D grid nodes, index ranges i in [-1, nx+1], j in [-1, ny+1].
class NodalField2D {
 public:
  NodalField2D() = default;
  NodalField2D(int nx, int ny, int m)
      : nx_(nx), ny_(ny), m_(m),
        d_(static_cast<size_t>(nx + 3) * (ny + 3) * m, 0.0) {}

  int components() const { return m_; }
  double& at(int i, int j, int c) { return d_[index(i, j, c)]; }
  double at(int i, int j, int c) const { return d_[index(i, j, c)]; }

  StateVec state(int i, int j) const {
    StateVec s(m_);
    for (int c = 0; c < m_; ++c) s[c] = at(i, j, c);
    return s;
  }
  void set_state(int i, int j, const StateVec& s) {
    for (int c = 0; c < m_; ++c) at(i, j, c) = s[c];
  }

  bool finite_interior() const {
    for (int j = 0; j <= ny_; ++j)
      for (int i = 0; i <= nx_; ++i)
        for (int c = 0; c < m_; ++c)
          if (!std::isfinite(at(i, j, c))) return false;
    return true;
  }

 private:
  size_t index(int i, int j, int c) const {
    return (static_cast<size_t>(j + 1) * (nx_ + 3) + (i + 1)) * m_ + c;
  }
  int nx_ = 0, ny_ = 0, m_ = 0;
  std::vector<double> d_;
};

struct Solution2D {
  Grid2D grid;
  NodalField2D u;  // point values
  NodalField2D v;  // u_x
  NodalField2D w;  // u_y
  NodalField2D z;  // u_xy

  Solution2D() = default;
  Solution2D(const Grid2D& g, int m)
      : grid(g), u(g.nx, g.ny, m), v(g.nx, g.ny, m), w(g.nx, g.ny, m), z(g.nx, g.ny, m) {}
  int components() const { return u.components(); }
};

}  // namespace rdh
