#pragma once

#include <string>
#include <vector>

#include "areadist/complex_pair.hpp"
#include "areadist/geom.hpp"

namespace areadist {

enum class CurveKind { Parabola, Circle, Hyperbola, Cubic, Quartic, Polynomial };

/// A plane curve component pair evaluated at a complex parameter.
struct CxVec2 {
  Cx x, y;
  Vec2 re() const { return {x.re, y.re}; }
  Vec2 im() const { return {x.im, y.im}; }
};

/// Analytic plane curve, evaluable at real and complex parameter values.
///
/// Catalog parametrizations:
///   parabola  C(r) = (r, r^2/2)
///   circle    C(r) = (cos r, sin r)
///   hyperbola C(r) = (e^r, e^-r)
///   cubic     C(r) = (r, r^3)
///   quartic   C(r) = (r, r^4)
/// Polynomial curves carry real coefficient lists for x(r) and y(r)
/// (ascending powers), so C(conj z) = conj C(z) holds for all kinds.
class AnalyticCurve {
public:
  static AnalyticCurve parabola() { return AnalyticCurve(CurveKind::Parabola); }
  static AnalyticCurve circle() { return AnalyticCurve(CurveKind::Circle); }
  static AnalyticCurve hyperbola() { return AnalyticCurve(CurveKind::Hyperbola); }
  static AnalyticCurve cubic() { return AnalyticCurve(CurveKind::Cubic); }
  static AnalyticCurve quartic() { return AnalyticCurve(CurveKind::Quartic); }
  static AnalyticCurve polynomial(std::vector<double> x_coeffs, std::vector<double> y_coeffs);

  CurveKind kind() const { return kind_; }
  bool in_catalog() const { return kind_ != CurveKind::Polynomial; }
  std::string name() const;

  Vec2 point(double r) const;
  Vec2 derivative(double r) const;
  Vec2 second_derivative(double r) const;

  CxVec2 point_c(double s, double t) const;
  CxVec2 derivative_c(double s, double t) const;
  CxVec2 second_derivative_c(double s, double t) const;

  const std::vector<double>& x_coeffs() const { return cx_; }
  const std::vector<double>& y_coeffs() const { return cy_; }

private:
  explicit AnalyticCurve(CurveKind k) : kind_(k) {}

  CurveKind kind_;
  std::vector<double> cx_, cy_;      // Polynomial only
  std::vector<double> dcx_, dcy_;    // derivative coefficients
  std::vector<double> d2cx_, d2cy_;  // second-derivative coefficients
};

/// Parses "parabola|circle|hyperbola|cubic|quartic|poly:<x coeffs>;<y coeffs>"
/// with comma-separated ascending coefficients, e.g. "poly:0,1;0,0,0.5".
/// Throws Error{UnsupportedKind} on anything else.
AnalyticCurve parse_curve(const std::string& spec);

}  // namespace areadist
