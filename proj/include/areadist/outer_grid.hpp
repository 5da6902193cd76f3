#pragma once

#include <cstddef>
#include <vector>

#include "areadist/geom.hpp"
#include "areadist/report.hpp"

namespace areadist {

/// Discrete analytic extension of a convex polyline to its outer side.
///
/// The lattice functions X, Y live on integer points (u,v), v >= 0, with row
/// v = 0 equal to the input vertices; their conjugates h = (h1,h2) live on
/// the dual lattice (u+1/2, v+1/2) and are coupled by the discrete
/// Cauchy-Riemann equations
///   g(u+1,v) - g(u,v) =  h(u+1/2,v+1/2) - h(u+1/2,v-1/2)
///   g(u,v+1) - g(u,v) = -(h(u+1/2,v+1/2) - h(u-1/2,v+1/2))
/// The seed row is fixed by the mirror condition h(u+1/2,-1/2) = -h(u+1/2,1/2),
/// which forces h(u+1/2,1/2) = L_u. F integrates the v-direction determinant
/// increment from F = 0 on the curve, and Q = (X, Y, F) is a discrete
/// definite improper affine sphere.
///
/// Open polylines lose one cell at each row end per level (diamond);
/// closed polygons are periodic in u.
class OuterGrid {
public:
  const ConvexPolyline& polyline() const { return poly_; }
  std::size_t levels() const { return g_.size() - 1; }

  bool has_point(long u, long v) const;
  Vec2 P(long u, long v) const;  // (X, Y)
  double X(long u, long v) const { return P(u, v).x; }
  double Y(long u, long v) const { return P(u, v).y; }
  double F(long u, long v) const;
  Vec3 Q(long u, long v) const;

  /// Dual-lattice conjugate at (u+1/2, v+1/2); v = -1 yields the mirror row
  /// h(u+1/2,-1/2) = -L_u.
  bool has_h(long u, long v) const;
  Vec2 h(long u, long v) const;

  /// Co-normal nu = (-h2, h1, 1) at (u+1/2, v+1/2).
  Vec3 conormal(long u, long v) const;

  /// Inclusive u-range of stored integer points on row v.
  long row_begin(long v) const;
  long row_end(long v) const;
  /// Inclusive u-range of stored dual points on row v+1/2.
  long dual_row_begin(long v) const;
  long dual_row_end(long v) const;

  double max_abs_F() const { return max_abs_f_; }

  friend OuterGrid propagate_outer(const ConvexPolyline& poly, std::size_t levels);

private:
  explicit OuterGrid(const ConvexPolyline& poly) : poly_(poly) {}
  std::size_t wrap(long u) const;

  ConvexPolyline poly_;
  std::vector<std::vector<Vec2>> g_;    // g_[v][u - row_begin(v)]
  std::vector<std::vector<double>> f_;  // same layout as g_
  std::vector<std::vector<Vec2>> h_;    // h_[v][u - dual_row_begin(v)]
  double max_abs_f_ = 0.0;
};

/// The forced seed row h(u+1/2, 1/2) = L_u of the dual field.
std::vector<Vec2> seed_h(const ConvexPolyline& poly);

/// Marches the discrete Cauchy-Riemann equations `levels` rows outward.
/// Throws Error{LevelsOutOfRange} when levels < 1 or an open polyline's
/// diamond is exhausted (levels > (N-1)/2).
OuterGrid propagate_outer(const ConvexPolyline& poly, std::size_t levels);

/// Max over interior plaquettes of the path-dependence of F: the u-then-v
/// increments minus the v-then-u increments, both taken from the dual-field
/// determinant formulas, relative to max |F|. Zero up to rounding.
double integrability_residual(const OuterGrid& grid);

/// Checks the discrete definite improper-affine-sphere conditions:
/// (1) each quadrangle Q(u,v), Q(u+1,v), Q(u,v+1), Q(u+1,v+1) is planar
///     (every edge orthogonal to the plaquette co-normal);
/// (2) the five-point laplacian of (X, Y) vanishes;
/// (3) laplacian(F)(u,v) equals the area A(u,v) = [v3,v2] + [v1,v4] of the
///     quadrangle of planar neighbour differences.
SphereCheckReport verify_definite_sphere(const OuterGrid& grid, double tol);

/// Max relative mismatch of the literal cross-product identities
///   Q(u+1,v) - Q(u,v) =  nu(u+1/2,v+1/2) x nu(u+1/2,v-1/2)
///   Q(u,v+1) - Q(u,v) = -nu(u+1/2,v+1/2) x nu(u-1/2,v+1/2)
/// over all stored edges.
double conormal_identity_residual(const OuterGrid& grid);

}  // namespace areadist
