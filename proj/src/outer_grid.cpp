#include "areadist/outer_grid.hpp"

#include <algorithm>
#include <cmath>

namespace areadist {

std::size_t OuterGrid::wrap(long u) const {
  const long n = static_cast<long>(poly_.size());
  return static_cast<std::size_t>(((u % n) + n) % n);
}

long OuterGrid::row_begin(long v) const { return poly_.closed() ? 0 : v; }
long OuterGrid::row_end(long v) const {
  return poly_.closed() ? static_cast<long>(poly_.size()) - 1
                        : static_cast<long>(poly_.size()) - 1 - v;
}
long OuterGrid::dual_row_begin(long v) const { return poly_.closed() ? 0 : std::max(v, 0L); }
long OuterGrid::dual_row_end(long v) const {
  return poly_.closed() ? static_cast<long>(poly_.size()) - 1
                        : static_cast<long>(poly_.size()) - 2 - std::max(v, 0L);
}

bool OuterGrid::has_point(long u, long v) const {
  if (v < 0 || v >= static_cast<long>(g_.size())) return false;
  return poly_.closed() || (u >= row_begin(v) && u <= row_end(v));
}

Vec2 OuterGrid::P(long u, long v) const {
  if (!has_point(u, v))
    throw Error(ErrorCode::IndexOutOfRange,
                "lattice point (" + std::to_string(u) + "," + std::to_string(v) + ") not stored");
  return poly_.closed() ? g_[v][wrap(u)] : g_[v][static_cast<std::size_t>(u - row_begin(v))];
}

double OuterGrid::F(long u, long v) const {
  if (!has_point(u, v))
    throw Error(ErrorCode::IndexOutOfRange,
                "lattice point (" + std::to_string(u) + "," + std::to_string(v) + ") not stored");
  return poly_.closed() ? f_[v][wrap(u)] : f_[v][static_cast<std::size_t>(u - row_begin(v))];
}

Vec3 OuterGrid::Q(long u, long v) const {
  const Vec2 g = P(u, v);
  return {g.x, g.y, F(u, v)};
}

bool OuterGrid::has_h(long u, long v) const {
  if (v == -1)  // mirror row below the curve
    return poly_.closed() || (u >= 0 && u + 1 < static_cast<long>(poly_.size()));
  if (v < 0 || v >= static_cast<long>(h_.size())) return false;
  return poly_.closed() || (u >= dual_row_begin(v) && u <= dual_row_end(v));
}

Vec2 OuterGrid::h(long u, long v) const {
  if (!has_h(u, v))
    throw Error(ErrorCode::IndexOutOfRange,
                "dual point (" + std::to_string(u) + "+1/2," + std::to_string(v) + "+1/2) not stored");
  if (v == -1) return -1.0 * poly_.half_side(wrap(u));
  return poly_.closed() ? h_[v][wrap(u)] : h_[v][static_cast<std::size_t>(u - dual_row_begin(v))];
}

Vec3 OuterGrid::conormal(long u, long v) const {
  const Vec2 hh = h(u, v);
  return {-hh.y, hh.x, 1.0};
}

std::vector<Vec2> seed_h(const ConvexPolyline& poly) {
  std::vector<Vec2> row(poly.side_count());
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = poly.half_side(i);
  return row;
}

OuterGrid propagate_outer(const ConvexPolyline& poly, std::size_t levels) {
  const std::size_t n = poly.size();
  const bool closed = poly.closed();
  if (levels < 1) throw Error(ErrorCode::LevelsOutOfRange, "levels must be >= 1");
  if (!closed && levels > (n - 1) / 2)
    throw Error(ErrorCode::LevelsOutOfRange,
                "open polyline with " + std::to_string(n) + " vertices admits " +
                    std::to_string((n - 1) / 2) + " levels");

  OuterGrid grid(poly);
  grid.g_.resize(levels + 1);
  grid.f_.resize(levels + 1);
  grid.h_.resize(levels);

  grid.g_[0] = poly.vertices();
  grid.f_[0].assign(n, 0.0);

  for (std::size_t v = 0; v < levels; ++v) {
    const long lv = static_cast<long>(v);
    const auto& gv = grid.g_[v];
    const long g_u0 = grid.row_begin(lv);

    // first CR equation: lift the dual row
    auto& hv = grid.h_[v];
    const long h_u0 = grid.dual_row_begin(lv);
    const long h_u1 = grid.dual_row_end(lv);
    hv.resize(static_cast<std::size_t>(h_u1 - h_u0 + 1));
    if (v == 0) {
      for (long u = h_u0; u <= h_u1; ++u)
        hv[static_cast<std::size_t>(u - h_u0)] = poly.half_side(grid.wrap(u));
    } else {
      const auto& hprev = grid.h_[v - 1];
      const long hp_u0 = grid.dual_row_begin(lv - 1);
      for (long u = h_u0; u <= h_u1; ++u) {
        const Vec2 gp = closed ? gv[grid.wrap(u + 1)] : gv[static_cast<std::size_t>(u + 1 - g_u0)];
        const Vec2 gc = closed ? gv[grid.wrap(u)] : gv[static_cast<std::size_t>(u - g_u0)];
        hv[static_cast<std::size_t>(u - h_u0)] =
            (closed ? hprev[grid.wrap(u)] : hprev[static_cast<std::size_t>(u - hp_u0)]) + gp - gc;
      }
    }

    // second CR equation and the F increment: next integer row
    auto& gnext = grid.g_[v + 1];
    auto& fnext = grid.f_[v + 1];
    const long gn_u0 = grid.row_begin(lv + 1);
    const long gn_u1 = grid.row_end(lv + 1);
    gnext.resize(static_cast<std::size_t>(gn_u1 - gn_u0 + 1));
    fnext.resize(gnext.size());
    const auto& fv = grid.f_[v];
    for (long u = gn_u0; u <= gn_u1; ++u) {
      const Vec2 h_r = closed ? hv[grid.wrap(u)] : hv[static_cast<std::size_t>(u - h_u0)];
      const Vec2 h_l = closed ? hv[grid.wrap(u - 1)] : hv[static_cast<std::size_t>(u - 1 - h_u0)];
      const Vec2 gc = closed ? gv[grid.wrap(u)] : gv[static_cast<std::size_t>(u - g_u0)];
      const double fc = closed ? fv[grid.wrap(u)] : fv[static_cast<std::size_t>(u - g_u0)];
      gnext[static_cast<std::size_t>(u - gn_u0)] = gc - (h_r - h_l);
      fnext[static_cast<std::size_t>(u - gn_u0)] = fc + bracket2(h_l, h_r);
    }
  }

  double mf = 0.0;
  for (const auto& row : grid.f_)
    for (double x : row) mf = std::max(mf, std::abs(x));
  grid.max_abs_f_ = mf;
  return grid;
}

namespace {

// F increments from the dual-field determinant formulas
double dfu(const OuterGrid& g, long u, long v) { return -bracket2(g.h(u, v - 1), g.h(u, v)); }
double dfv(const OuterGrid& g, long u, long v) { return bracket2(g.h(u - 1, v), g.h(u, v)); }

}  // namespace

double integrability_residual(const OuterGrid& grid) {
  const long levels = static_cast<long>(grid.levels());
  const bool closed = grid.polyline().closed();
  const long n = static_cast<long>(grid.polyline().size());
  double worst = 0.0;
  for (long v = 0; v + 2 <= levels; ++v) {
    const long u_begin = closed ? 0 : v + 1;
    const long u_end = closed ? n - 1 : n - 3 - v;
    for (long u = u_begin; u <= u_end; ++u) {
      if (!grid.has_h(u, v - 1) || !grid.has_h(u + 1, v) || !grid.has_h(u, v + 1)) continue;
      const double r = std::abs(dfu(grid, u, v) + dfv(grid, u + 1, v) - dfv(grid, u, v) -
                                dfu(grid, u, v + 1));
      worst = std::max(worst, r);
    }
  }
  const double scale = std::max(grid.max_abs_F(), 1e-300);
  return worst / scale;
}

SphereCheckReport verify_definite_sphere(const OuterGrid& grid, double tol) {
  const long levels = static_cast<long>(grid.levels());
  const bool closed = grid.polyline().closed();
  const long n = static_cast<long>(grid.polyline().size());
  SphereCheckReport rep;

  // (1) planar quadrangles: every edge orthogonal to the plaquette co-normal
  for (long v = 0; v < levels; ++v) {
    const long u_begin = closed ? 0 : v + 1;
    const long u_end = closed ? n - 1 : n - 3 - v;
    for (long u = u_begin; u <= u_end; ++u) {
      if (!grid.has_h(u, v)) continue;
      const Vec3 nu = grid.conormal(u, v);
      const double nn = norm(nu);
      const Vec3 q00 = grid.Q(u, v), q10 = grid.Q(u + 1, v);
      const Vec3 q01 = grid.Q(u, v + 1), q11 = grid.Q(u + 1, v + 1);
      for (const Vec3& e : {q10 - q00, q11 - q10, q11 - q01, q01 - q00}) {
        const double en = norm(e);
        if (en <= 0.0) continue;
        rep.max_coplanarity_residual =
            std::max(rep.max_coplanarity_residual, std::abs(dot(e, nu)) / (en * nn));
      }
    }
  }

  // (2) five-point laplacian of (X,Y) vanishes; (3) laplacian of F equals the
  // area of the neighbour quadrangle
  for (long v = 1; v < levels; ++v) {
    const long u_begin = closed ? 0 : v + 1;
    const long u_end = closed ? n - 1 : n - 2 - v;
    for (long u = u_begin; u <= u_end; ++u) {
      if (!grid.has_point(u, v + 1)) continue;
      const Vec2 pc = grid.P(u, v);
      const Vec2 v1 = grid.P(u + 1, v) - pc;
      const Vec2 v2 = grid.P(u, v + 1) - pc;
      const Vec2 v3 = grid.P(u - 1, v) - pc;
      const Vec2 v4 = grid.P(u, v - 1) - pc;
      const Vec2 lap_xy = v1 + v2 + v3 + v4;
      const double scale =
          std::max({norm(v1), norm(v2), norm(v3), norm(v4), 1e-300});
      rep.max_cross_difference_xy_residual =
          std::max(rep.max_cross_difference_xy_residual, norm(lap_xy) / scale);

      const double area = bracket2(v3, v2) + bracket2(v1, v4);
      const double fc = grid.F(u, v);
      const double lap_f = grid.F(u + 1, v) + grid.F(u - 1, v) + grid.F(u, v + 1) +
                           grid.F(u, v - 1) - 4.0 * fc;
      const double fscale = std::max(
          {std::abs(area), std::abs(grid.F(u + 1, v)), std::abs(grid.F(u - 1, v)),
           std::abs(grid.F(u, v + 1)), std::abs(grid.F(u, v - 1)), std::abs(fc), 1e-300});
      rep.max_cross_difference_z_error =
          std::max(rep.max_cross_difference_z_error, std::abs(lap_f - area) / fscale);
    }
  }

  rep.pass = rep.max_coplanarity_residual <= tol && rep.max_cross_difference_xy_residual <= tol &&
             rep.max_cross_difference_z_error <= tol;
  return rep;
}

double conormal_identity_residual(const OuterGrid& grid) {
  const long levels = static_cast<long>(grid.levels());
  double worst = 0.0;
  auto update = [&](Vec3 lhs, Vec3 rhs) {
    const double scale = std::max({norm(lhs), norm(rhs), 1e-300});
    worst = std::max(worst, norm(lhs - rhs) / scale);
  };

  for (long v = 0; v <= levels; ++v) {
    const long u_begin = grid.row_begin(v);
    const long u_end = grid.row_end(v);
    for (long u = u_begin; u <= u_end; ++u) {
      // u-edge: Q(u+1,v) - Q(u,v) = nu(u,v) x nu(u,v-1)
      if (grid.has_point(u + 1, v) && grid.has_h(u, v) && grid.has_h(u, v - 1))
        update(grid.Q(u + 1, v) - grid.Q(u, v),
               cross(grid.conormal(u, v), grid.conormal(u, v - 1)));
      // v-edge: Q(u,v+1) - Q(u,v) = -nu(u,v) x nu(u-1,v)
      if (grid.has_point(u, v + 1) && grid.has_h(u, v) && grid.has_h(u - 1, v))
        update(grid.Q(u, v + 1) - grid.Q(u, v),
               -1.0 * cross(grid.conormal(u, v), grid.conormal(u - 1, v)));
    }
  }
  return worst;
}

}  // namespace areadist
