#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace areadist {

enum class ErrorCode {
  TooFewVertices,
  ZeroLengthSide,
  NonConvex,
  LevelOutOfRange,
  WindowTurningExceeded,
  IndexOutOfRange,
  CellNotStored,
  ParameterOutOfRange,
  PointOutside,
  DegenerateChord,
  NoValidChord,
  LevelsOutOfRange,
  DomainViolation,
  UnsupportedKind,
  OmegaZero,
  ChartInversionFailed,
  CrossingTangents,
  PlanarityAuditFailed,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Plane vector. Constructors reject non-finite components.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("Vec2: non-finite component");
  }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

/// Space vector.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw std::invalid_argument("Vec3: non-finite component");
  }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// [X,Y]: determinant of the 2x2 matrix with columns X, Y. Antisymmetric.
inline double bracket2(Vec2 X, Vec2 Y) { return X.x * Y.y - X.y * Y.x; }

/// Ninety-degree rotation, anti-clockwise: (x,y) -> (-y,x).
/// Satisfies bracket2(X,Y) == -dot(X, rot90(Y)).
inline Vec2 rot90(Vec2 X) { return {-X.y, X.x}; }

/// [X,Y,Z]: determinant of the 3x3 matrix with columns X, Y, Z.
inline double bracket3(Vec3 X, Vec3 Y, Vec3 Z) { return dot(X, cross(Y, Z)); }

/// A convex polyline (open arc) or convex polygon (closed), positively
/// oriented. Half-side vectors L_i = (c_{i+1} - c_i)/2 are cached; open case
/// additionally has every pair bracket [L_i, L_j] > 0 for j > i.
class ConvexPolyline {
public:
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  Vec2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  bool closed() const { return closed_; }

  /// Number of sides: N-1 open, N closed.
  std::size_t side_count() const { return half_sides_.size(); }
  /// L_i = (c_{i+1} - c_i)/2, index taken mod side count.
  Vec2 half_side(std::size_t i) const { return half_sides_[i % half_sides_.size()]; }

  /// Bounding-box diagonal; scale reference for tolerances.
  double diameter() const { return diameter_; }
  /// Strict-convexity threshold the polyline was validated against.
  double convexity_eps() const { return eps_; }

  friend ConvexPolyline validate_polyline(std::vector<Vec2> vertices, bool closed, double convexity_eps);

private:
  ConvexPolyline() = default;

  std::vector<Vec2> vertices_;
  std::vector<Vec2> half_sides_;
  bool closed_ = false;
  double diameter_ = 0.0;
  double eps_ = 0.0;
};

/// Absolute shoelace area of the polygon with the given vertex loop.
double polygon_area(const std::vector<Vec2>& loop);

/// Validates a raw vertex list as a ConvexPolyline.
///
/// Open: requires [L_i, L_j] > eps for every pair j > i (total turning < pi).
/// Closed: requires a positively oriented, strictly convex polygon (every
/// consecutive pair turns left, total turning 2*pi); the window constraint
/// for grids is enforced where grids are built.
///
/// convexity_eps < 0 selects the default 1e-12 * diameter^2.
/// Throws Error{TooFewVertices|ZeroLengthSide|NonConvex}.
ConvexPolyline validate_polyline(std::vector<Vec2> vertices, bool closed, double convexity_eps = -1.0);

}  // namespace areadist
