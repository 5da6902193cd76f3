#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "areadist/geom.hpp"
#include "areadist/report.hpp"

namespace areadist {

/// Inner area-distance grid of a convex polyline.
///
/// Cells are indexed by vertex pairs (i,j), j >= i, with level k = j - i:
///   p(i,j) = (c_i + c_j)/2
///   f(i,j) = sum over i <= k < l <= j-1 of a_{k,l},  a_{k,l} = [L_k, L_l]
/// The lattice map q(i,j) = (p(i,j), f(i,j)) is a discrete indefinite
/// improper affine sphere. Storage is level-major: cells of one level are
/// contiguous, so the build streams over two adjacent levels.
class InnerGrid {
public:
  const ConvexPolyline& polyline() const { return poly_; }
  std::size_t max_level() const { return f_.size() - 1; }

  bool has_cell(std::size_t i, std::size_t j) const;
  double f(std::size_t i, std::size_t j) const;
  Vec2 p(std::size_t i, std::size_t j) const;
  /// Parallelogram area a_ij = [L_i, L_j]; stored for 1 <= j-i <= maxLevel-1.
  double a(std::size_t i, std::size_t j) const;

  /// Cells at one level, index i running over valid starts.
  const std::vector<double>& f_level(std::size_t level) const { return f_[level]; }
  std::size_t level_size(std::size_t level) const { return f_[level].size(); }

  double max_f() const { return max_f_; }

  friend InnerGrid build_inner_grid(const ConvexPolyline& poly, std::size_t max_level);

private:
  InnerGrid(const ConvexPolyline& poly) : poly_(poly) {}
  std::size_t check_index(std::size_t i, std::size_t j) const;  // returns level

  ConvexPolyline poly_;
  std::vector<std::vector<double>> f_;  // f_[k][i] = f(i, i+k)
  std::vector<std::vector<double>> a_;  // a_[d][i] = [L_i, L_{i+d}], d >= 1
  double max_f_ = 0.0;
};

/// Builds the grid up to max_level with the O(1)-per-cell recurrence
///   f(i,j+1) = f(i,j) + f(i+1,j+1) - f(i+1,j) + [L_i, L_j]
/// seeded by f = 0 on levels 0 and 1. Total work O(N * max_level).
///
/// Open polylines admit max_level <= N-1 (Error{LevelOutOfRange} beyond).
/// Closed polygons are capped by the first side gap d with some
/// [L_i, L_{i+d}] <= eps (Error{WindowTurningExceeded} beyond).
InnerGrid build_inner_grid(const ConvexPolyline& poly, std::size_t max_level);

/// Largest level a grid of this polyline may be built to.
std::size_t max_buildable_level(const ConvexPolyline& poly);

/// Literal double sum for f(i,j); O((j-i)^2) reference oracle for the
/// recurrence. Throws Error{IndexOutOfRange}.
double inner_f_direct(const ConvexPolyline& poly, std::size_t i, std::size_t j);

/// Exact evaluation inside parallelogram (i,j):
///   point = p(i,j) + lambda*L_i + mu*L_j,  lambda, mu in [0,1]
///   value = bilinear blend of the four corner f values.
/// Exact because both endpoints of the minimal chord slide along straight
/// edges, making f bilinear per parallelogram.
std::pair<Vec2, double> eval_bilinear(const InnerGrid& grid, std::size_t i, std::size_t j,
                                      double lambda, double mu);

/// Checks the discrete indefinite improper-affine-sphere conditions on every
/// interior cell: (1) the five-point cross of q(i,j) = (p(i,j), f(i,j)) is
/// coplanar (residual = max point-to-plane distance / cross diameter);
/// (2) q(i,j)+q(i+1,j+1)-q(i+1,j)-q(i,j+1) vanishes in x,y and equals -a_ij
/// in z (both relative residuals).
SphereCheckReport verify_indefinite_sphere(const InnerGrid& grid, double tol);

}  // namespace areadist
