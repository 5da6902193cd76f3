#include "areadist/inner_grid.hpp"

#include <algorithm>
#include <cmath>

namespace areadist {

std::size_t max_buildable_level(const ConvexPolyline& poly) {
  const std::size_t n = poly.size();
  if (!poly.closed()) return n - 1;
  // closed: cells at level k need [L_i, L_{i+d}] > eps for all gaps d <= k-1
  const double eps = poly.convexity_eps();
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i < n; ++i)
      if (!(bracket2(poly.half_side(i), poly.half_side(i + d)) > eps)) return d;
  return n;
}

InnerGrid build_inner_grid(const ConvexPolyline& poly, std::size_t max_level) {
  const std::size_t n = poly.size();
  if (max_level < 1)
    throw Error(ErrorCode::LevelOutOfRange, "max_level must be >= 1");
  if (!poly.closed() && max_level > n - 1)
    throw Error(ErrorCode::LevelOutOfRange,
                "open polyline with " + std::to_string(n) + " vertices admits max level " +
                    std::to_string(n - 1));
  if (poly.closed()) {
    const std::size_t cap = max_buildable_level(poly);
    if (max_level > cap)
      throw Error(ErrorCode::WindowTurningExceeded,
                  "requested level " + std::to_string(max_level) +
                      " crosses the [L_i,L_j]>0 window (cap " + std::to_string(cap) + ")");
  }

  const bool closed = poly.closed();
  auto level_size = [&](std::size_t k) { return closed ? n : n - k; };

  InnerGrid grid(poly);
  grid.f_.resize(max_level + 1);
  grid.f_[0].assign(level_size(0), 0.0);
  grid.f_[1].assign(level_size(1), 0.0);
  grid.a_.resize(max_level);  // gaps 1 .. max_level-1 (index 0 unused)

  for (std::size_t d = 1; d < max_level; ++d) {
    const std::size_t cnt = closed ? n : n - 1 - d;
    auto& ad = grid.a_[d];
    ad.resize(cnt);
    for (std::size_t i = 0; i < cnt; ++i)
      ad[i] = bracket2(poly.half_side(i), poly.half_side(i + d));
  }

  for (std::size_t k = 1; k < max_level; ++k) {
    const auto& fk = grid.f_[k];
    const auto& fkm1 = grid.f_[k - 1];
    const auto& ak = grid.a_[k];
    auto& fk1 = grid.f_[k + 1];
    fk1.resize(level_size(k + 1));
    const std::size_t cnt = fk1.size();
    if (closed) {
      for (std::size_t i = 0; i < cnt; ++i) {
        const std::size_t i1 = (i + 1) % n;
        fk1[i] = fk[i] + fk[i1] - fkm1[i1] + ak[i];
      }
    } else {
      for (std::size_t i = 0; i < cnt; ++i)
        fk1[i] = fk[i] + fk[i + 1] - fkm1[i + 1] + ak[i];
    }
  }

  double mf = 0.0;
  for (const auto& lvl : grid.f_)
    for (double v : lvl) mf = std::max(mf, v);
  grid.max_f_ = mf;
  return grid;
}

std::size_t InnerGrid::check_index(std::size_t i, std::size_t j) const {
  if (j < i) throw Error(ErrorCode::IndexOutOfRange, "cell requires j >= i");
  const std::size_t level = j - i;
  const bool stored = level < f_.size() && (poly_.closed() || i < f_[level].size());
  if (!stored)
    throw Error(ErrorCode::CellNotStored,
                "cell (" + std::to_string(i) + "," + std::to_string(j) + ") not stored");
  return level;
}

bool InnerGrid::has_cell(std::size_t i, std::size_t j) const {
  if (j < i) return false;
  const std::size_t level = j - i;
  if (level >= f_.size()) return false;
  return poly_.closed() || i < f_[level].size();
}

double InnerGrid::f(std::size_t i, std::size_t j) const {
  const std::size_t level = check_index(i, j);
  return f_[level][poly_.closed() ? i % poly_.size() : i];
}

Vec2 InnerGrid::p(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return 0.5 * (poly_.vertex(i) + poly_.vertex(j));
}

double InnerGrid::a(std::size_t i, std::size_t j) const {
  const bool stored = j > i && j - i < a_.size() &&
                      (poly_.closed() || i < a_[j - i].size());
  if (!stored)
    throw Error(ErrorCode::CellNotStored,
                "a(" + std::to_string(i) + "," + std::to_string(j) + ") not stored");
  return a_[j - i][poly_.closed() ? i % poly_.size() : i];
}

double inner_f_direct(const ConvexPolyline& poly, std::size_t i, std::size_t j) {
  const std::size_t n = poly.size();
  if (j < i) throw Error(ErrorCode::IndexOutOfRange, "requires j >= i");
  if (poly.closed()) {
    if (i >= n || j - i > n)
      throw Error(ErrorCode::IndexOutOfRange, "cell outside closed-grid index range");
  } else {
    if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "vertex index past open polyline end");
  }
  double sum = 0.0;
  if (j >= i + 2)
    for (std::size_t k = i; k <= j - 2; ++k)
      for (std::size_t l = k + 1; l <= j - 1; ++l)
        sum += bracket2(poly.half_side(k), poly.half_side(l));
  return sum;
}

std::pair<Vec2, double> eval_bilinear(const InnerGrid& grid, std::size_t i, std::size_t j,
                                      double lambda, double mu) {
  if (!(lambda >= 0.0 && lambda <= 1.0 && mu >= 0.0 && mu <= 1.0))
    throw Error(ErrorCode::ParameterOutOfRange, "lambda, mu must lie in [0,1]");
  if (!grid.has_cell(i, j) || !grid.has_cell(i + 1, j) || !grid.has_cell(i, j + 1) ||
      !grid.has_cell(i + 1, j + 1))
    throw Error(ErrorCode::CellNotStored, "parallelogram (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") has unstored corners");

  const ConvexPolyline& poly = grid.polyline();
  const Vec2 point = grid.p(i, j) + lambda * poly.half_side(i) + mu * poly.half_side(j);
  const double value = (1.0 - lambda) * (1.0 - mu) * grid.f(i, j) +
                       lambda * (1.0 - mu) * grid.f(i + 1, j) +
                       (1.0 - lambda) * mu * grid.f(i, j + 1) +
                       lambda * mu * grid.f(i + 1, j + 1);
  return {point, value};
}

SphereCheckReport verify_indefinite_sphere(const InnerGrid& grid, double tol) {
  const ConvexPolyline& poly = grid.polyline();
  const std::size_t n = poly.size();
  const bool closed = poly.closed();
  const std::size_t max_level = grid.max_level();
  SphereCheckReport rep;

  auto q = [&](std::size_t i, std::size_t j) {
    const Vec2 pp = grid.p(i, j);
    return Vec3{pp.x, pp.y, grid.f(i, j)};
  };

  for (std::size_t k = 1; k + 1 <= max_level; ++k) {
    const std::size_t cells = closed ? n : grid.level_size(k);
    for (std::size_t i = 0; i < cells; ++i) {
      const std::size_t j = i + k;
      const bool has_up = closed || i + k + 1 <= n - 1;  // (i, j+1) stored?

      // plaquette cross-difference q(i,j)+q(i+1,j+1)-q(i+1,j)-q(i,j+1)
      if (has_up) {
        const Vec3 d = q(i, j) + q(i + 1, j + 1) - q(i + 1, j) - q(i, j + 1);
        const double a_ij = grid.a(i, j);
        const double fscale =
            std::max({std::abs(grid.f(i, j)), std::abs(grid.f(i + 1, j + 1)),
                      std::abs(grid.f(i + 1, j)), std::abs(grid.f(i, j + 1)), std::abs(a_ij)});
        const double cell_diam = 2.0 * std::max(norm(poly.half_side(i)), norm(poly.half_side(j)));
        rep.max_cross_difference_xy_residual = std::max(
            rep.max_cross_difference_xy_residual, std::hypot(d.x, d.y) / cell_diam);
        rep.max_cross_difference_z_error =
            std::max(rep.max_cross_difference_z_error,
                     std::abs(d.z + a_ij) / std::max(fscale, 1e-300));
      }

      // five-point cross q(i,j), q(i+-1,j), q(i,j+-1)
      if (!has_up || (!closed && i == 0)) continue;
      const std::size_t im1 = closed ? (i + n - 1) % n : i - 1;
      const Vec3 c0 = q(i, j);
      const Vec3 cm = q(im1, im1 + k + 1);  // q(i-1, j), level k+1
      const Vec3 cp = q(i + 1, j);
      const Vec3 cu = q(i, j + 1);
      const Vec3 cd = q(i, j - 1);

      // plane through q(i,j), q(i-1,j), q(i,j-1); the other two measured against it
      const Vec3 nrm = cross(cm - c0, cd - c0);
      const double nn = norm(nrm);
      double diam = 0.0;
      const Vec3 pts[5] = {c0, cm, cp, cu, cd};
      for (int s = 0; s < 5; ++s)
        for (int t = s + 1; t < 5; ++t) diam = std::max(diam, norm(pts[s] - pts[t]));
      if (nn <= 0.0 || diam <= 0.0) continue;
      double dist = 0.0;
      for (const Vec3& pt : {cp, cu})
        dist = std::max(dist, std::abs(dot(nrm, pt - c0)) / nn);
      rep.max_coplanarity_residual = std::max(rep.max_coplanarity_residual, dist / diam);
    }
  }

  rep.pass = rep.max_coplanarity_residual <= tol && rep.max_cross_difference_xy_residual <= tol &&
             rep.max_cross_difference_z_error <= tol;
  return rep;
}

}  // namespace areadist
