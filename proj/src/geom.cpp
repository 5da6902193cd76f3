#include "areadist/geom.hpp"

#include <algorithm>
#include <limits>

namespace areadist {

namespace {

double bbox_diagonal(const std::vector<Vec2>& pts) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = xmax;
  for (const Vec2& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

}  // namespace

double polygon_area(const std::vector<Vec2>& loop) {
  double s = 0.0;
  for (std::size_t k = 0; k < loop.size(); ++k) s += bracket2(loop[k], loop[(k + 1) % loop.size()]);
  return 0.5 * std::abs(s);
}

ConvexPolyline validate_polyline(std::vector<Vec2> vertices, bool closed, double convexity_eps) {
  const std::size_t n = vertices.size();
  if (n < 3)
    throw Error(ErrorCode::TooFewVertices,
                "polyline needs at least 3 vertices, got " + std::to_string(n));

  const double diam = bbox_diagonal(vertices);
  if (diam <= 0.0)
    throw Error(ErrorCode::ZeroLengthSide, "all vertices coincide");
  const double eps = convexity_eps < 0.0 ? 1e-12 * diam * diam : convexity_eps;

  const std::size_t n_sides = closed ? n : n - 1;
  std::vector<Vec2> half_sides(n_sides);
  for (std::size_t i = 0; i < n_sides; ++i) {
    const Vec2 side = vertices[(i + 1) % n] - vertices[i];
    if (norm2(side) <= 1e-28 * diam * diam)
      throw Error(ErrorCode::ZeroLengthSide, "zero-length side at index " + std::to_string(i));
    half_sides[i] = 0.5 * side;
  }

  auto non_convex = [&](std::size_t i, std::size_t j, double b) -> Error {
    return Error(ErrorCode::NonConvex, "non-convex: [L_" + std::to_string(i) + ", L_" +
                                           std::to_string(j) + "] = " + std::to_string(b) +
                                           " (must exceed " + std::to_string(eps) + ")");
  };

  if (!closed) {
    for (std::size_t i = 0; i + 1 < n_sides; ++i)
      for (std::size_t j = i + 1; j < n_sides; ++j) {
        const double b = bracket2(half_sides[i], half_sides[j]);
        if (!(b > eps)) throw non_convex(i, j, b);
      }
  } else {
    double turning = 0.0;
    for (std::size_t i = 0; i < n_sides; ++i) {
      const Vec2 a = half_sides[i];
      const Vec2 b = half_sides[(i + 1) % n_sides];
      const double br = bracket2(a, b);
      if (!(br > eps)) throw non_convex(i, (i + 1) % n_sides, br);
      turning += std::atan2(br, dot(a, b));
    }
    // all-left turns with total turning 2*pi <=> simple, positively oriented
    if (std::abs(turning - 2.0 * M_PI) > 1e-6)
      throw Error(ErrorCode::NonConvex,
                  "closed polygon winds more than once (total turning " + std::to_string(turning) + ")");
  }

  ConvexPolyline out;
  out.vertices_ = std::move(vertices);
  out.half_sides_ = std::move(half_sides);
  out.closed_ = closed;
  out.diameter_ = diam;
  out.eps_ = eps;
  return out;
}

}  // namespace areadist
