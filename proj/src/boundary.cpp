#include "rdhweno/boundary.hpp"

#include <stdexcept>

namespace rdh {

void refresh_ghosts_1d(Solution1D& sol, const BoundaryPolicy1D& bc) {
  const int n = sol.grid.cells;
  const int m = sol.components();

  auto fill_side = [&](bool left, BoundaryKind kind, const BoundaryData1D& data) {
    if (kind == BoundaryKind::wall)
      throw std::invalid_argument("1D wall boundaries are not supported");
    const int bnode = left ? 0 : n;
    const int gnode = left ? -1 : n + 1;
    if (kind == BoundaryKind::dirichlet) {
      sol.u.set_state(bnode, data.value(sol.grid.x(bnode)));
      sol.u.set_state(gnode, data.value(sol.grid.x(gnode)));
      if (data.derivative) {
        sol.v.set_state(bnode, data.derivative(sol.grid.x(bnode)));
        sol.v.set_state(gnode, data.derivative(sol.grid.x(gnode)));
      } else {
        const int dir = left ? 1 : -1;
        for (int c = 0; c < m; ++c)
          sol.v.at(gnode, c) =
              extrapolate4(sol.v.at(gnode + 5 * dir, c), sol.v.at(gnode + 4 * dir, c),
                           sol.v.at(gnode + 3 * dir, c), sol.v.at(gnode + 2 * dir, c),
                           sol.v.at(gnode + dir, c));
      }
    } else {
      const int dir = left ? 1 : -1;
      auto extrap = [&](NodalField1D& f) {
        for (int c = 0; c < m; ++c)
          f.at(gnode, c) = extrapolate4(f.at(gnode + 5 * dir, c), f.at(gnode + 4 * dir, c),
                                        f.at(gnode + 3 * dir, c), f.at(gnode + 2 * dir, c),
                                        f.at(gnode + dir, c));
      };
      extrap(sol.u);
      extrap(sol.v);
    }
  };
  fill_side(true, bc.left, bc.left_data);
  fill_side(false, bc.right, bc.right_data);
}

namespace {

struct EdgeRef {
  BoundaryKind kind;
  const BoundaryData2D* data;
  bool horizontal_edge;  // bottom/top (ghost row) vs left/right (ghost column)
  bool low;              // left/bottom
};

std::array<EdgeRef, 4> edges_of(const BoundaryPolicy2D& bc) {
  return {EdgeRef{bc.left, &bc.left_data, false, true},
          EdgeRef{bc.right, &bc.right_data, false, false},
          EdgeRef{bc.bottom, &bc.bottom_data, true, true},
          EdgeRef{bc.top, &bc.top_data, true, false}};
}

void check_wall_placement(const BoundaryPolicy2D& bc) {
  if (bc.left == BoundaryKind::wall || bc.right == BoundaryKind::wall ||
      bc.top == BoundaryKind::wall)
    throw std::invalid_argument("wall boundaries are supported on the bottom edge only");
}

/// Fills one ghost strip of `field` by the per-edge rule. `analytic` is the
/// closed form for this field (may be null), `hold` additionally rewrites
/// the boundary nodes (used for the value field on Dirichlet edges),
/// `mirror_sign` gives the wall reflection parity per component.
void fill_edge(Solution2D& sol, NodalField2D& field, const EdgeRef& e,
               const std::function<StateVec(double, double)>& analytic, bool hold,
               const std::array<double, kMaxComponents>& mirror_sign) {
  const int nx = sol.grid.nx, ny = sol.grid.ny;
  const int m = field.components();
  const Grid2D& g = sol.grid;

  const int gpos = e.horizontal_edge ? (e.low ? -1 : ny + 1) : (e.low ? -1 : nx + 1);
  const int bpos = e.horizontal_edge ? (e.low ? 0 : ny) : (e.low ? 0 : nx);
  const int tan_max = e.horizontal_edge ? nx : ny;

  auto coord = [&](int t, int n) {  // (tangential index, normal index) -> (i, j)
    return e.horizontal_edge ? std::pair<int, int>{t, n} : std::pair<int, int>{n, t};
  };

  switch (e.kind) {
    case BoundaryKind::dirichlet: {
      if (analytic) {
        for (int t = -1; t <= tan_max + 1; ++t) {
          const auto [gi, gj] = coord(t, gpos);
          field.set_state(gi, gj, analytic(g.x(gi), g.y(gj)));
        }
        if (hold)
          for (int t = 0; t <= tan_max; ++t) {
            const auto [bi, bj] = coord(t, bpos);
            field.set_state(bi, bj, analytic(g.x(bi), g.y(bj)));
          }
        return;
      }
      [[fallthrough]];  // no closed form for this field: extrapolate the ghost
    }
    case BoundaryKind::outflow: {
      const int dir = e.low ? 1 : -1;
      for (int t = 0; t <= tan_max; ++t) {
        for (int c = 0; c < m; ++c) {
          auto val = [&](int k) {  // k nodes inward from the ghost
            const auto [i, j] = coord(t, gpos + k * dir);
            return field.at(i, j, c);
          };
          const auto [gi, gj] = coord(t, gpos);
          field.at(gi, gj, c) = extrapolate4(val(5), val(4), val(3), val(2), val(1));
        }
      }
      return;
    }
    case BoundaryKind::wall: {
      for (int t = -1; t <= tan_max + 1; ++t) {
        const auto [gi, gj] = coord(t, gpos);
        const auto [si, sj] = coord(t, bpos + (e.low ? 1 : -1));
        for (int c = 0; c < m; ++c) field.at(gi, gj, c) = mirror_sign[c] * field.at(si, sj, c);
      }
      return;
    }
  }
}

std::array<double, kMaxComponents> parity(const BoundaryPolicy2D& bc, bool odd_negates) {
  std::array<double, kMaxComponents> s{};
  for (int c = 0; c < kMaxComponents; ++c)
    s[c] = (bc.wall_odd[c] == odd_negates) ? -1.0 : 1.0;
  return s;
}

}  // namespace

void refresh_ghost_values_2d(Solution2D& sol, const BoundaryPolicy2D& bc) {
  check_wall_placement(bc);
  // dirichlet edges first, then outflow, wall last (the mirror reads the
  // already-filled ghost columns of the side edges)
  const auto sign_u = parity(bc, /*odd_negates=*/true);
  for (int pass = 0; pass < 3; ++pass) {
    for (const EdgeRef& e : edges_of(bc)) {
      const int want = e.kind == BoundaryKind::dirichlet ? 0
                       : e.kind == BoundaryKind::outflow ? 1
                                                         : 2;
      if (want != pass) continue;
      fill_edge(sol, sol.u, e, e.data->value, /*hold=*/true, sign_u);
    }
  }
}

void refresh_ghost_v_2d(Solution2D& sol, const BoundaryPolicy2D& bc) {
  const auto sign_v = parity(bc, /*odd_negates=*/true);  // u_x keeps the value parity
  for (const EdgeRef& e : edges_of(bc))
    fill_edge(sol, sol.v, e, e.data->d_dx, /*hold=*/false, sign_v);
}

void refresh_ghost_wz_2d(Solution2D& sol, const BoundaryPolicy2D& bc) {
  const auto sign_w = parity(bc, /*odd_negates=*/false);  // u_y flips the value parity
  for (const EdgeRef& e : edges_of(bc)) {
    fill_edge(sol, sol.w, e, e.data->d_dy, /*hold=*/false, sign_w);
    fill_edge(sol, sol.z, e, e.data->d_dxy, /*hold=*/false, sign_w);
  }
}

}  // namespace rdh
