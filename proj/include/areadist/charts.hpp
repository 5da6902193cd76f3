#pragma once

#include <utility>

#include "areadist/curves.hpp"
#include "areadist/geom.hpp"
#include "areadist/report.hpp"

namespace areadist {

// ---------------------------------------------------------------------------
// inner chart: asymptotic parameters (u,v), u > v
//   p(u,v) = (C(u)+C(v))/2,  q = (p, f),  omega = [C'(v),C'(u)]/4 = -f_uv
// ---------------------------------------------------------------------------

struct InnerPoint {
  double f = 0.0;
  Vec3 q;
  double omega = 0.0;
};

/// Chart plane point p(u,v) = (C(u)+C(v))/2.
Vec2 inner_chart_point(const AnalyticCurve& curve, double u, double v);

/// omega(u,v) = [C'(v), C'(u)]/4; positive on the chart domain.
double inner_omega(const AnalyticCurve& curve, double u, double v);

/// Closed-form inner area distance of the catalog curves.
/// Throws Error{DomainViolation} for u <= v, Error{UnsupportedKind} for
/// Polynomial curves (use inner_distance, which integrates the derivative
/// formulas along a chart path).
InnerPoint inner_closed(const AnalyticCurve& curve, double u, double v);

/// Inner area distance for any curve kind: catalog closed forms, or
/// quadrature of (f_u, f_v) = ([C(u)-C(v), C'(u)]/4, [C(u)-C(v), C'(v)]/4)
/// along the straight chart path from the diagonal.
double inner_distance(const AnalyticCurve& curve, double u, double v);

/// grad f = R((C(v)-C(u))/2), as a function of the plane point p(u,v).
Vec2 grad_f(const AnalyticCurve& curve, double u, double v);

// ---------------------------------------------------------------------------
// asymptotic structure coefficients
// ---------------------------------------------------------------------------

struct AsymptoticCoeffs {
  double a = 0.0;      // [p_u, p_uu] = [C'(u), C''(u)]/4, a function of u only
  double b = 0.0;      // -[p_v, p_vv] = -[C'(v), C''(v)]/4, a function of v only
  double omega = 0.0;  // [C'(v), C'(u)]/4
  double a_v_residual = 0.0;      // finite-difference d a / d v (vanishes)
  double b_u_residual = 0.0;      // finite-difference d b / d u (vanishes)
  double omega_fuv_residual = 0.0;  // |omega + f_uv| by finite differences
};

AsymptoticCoeffs asymptotic_coeffs(const AnalyticCurve& curve, double u, double v);

/// Pick invariant j = a*b / omega^3. Throws Error{OmegaZero} when |omega|
/// is below 1e-12.
double pick_invariant_inner(const AnalyticCurve& curve, double u, double v);

/// pi_1 = p + R grad(f) and pi_2 = p - R grad(f); equal to C(u) and C(v).
std::pair<Vec2, Vec2> projections_pi(const AnalyticCurve& curve, double u, double v);

// ---------------------------------------------------------------------------
// outer chart: isothermal parameters (s,t), t > 0
//   P(s,t) = Re C(s+it),  Q = (P, F),  Omega = [Re C'(z), Im C'(z)]/2
// ---------------------------------------------------------------------------

struct OuterPoint {
  Vec3 Q;
  double F = 0.0;
  double Omega = 0.0;
};

/// Chart plane point P(s,t) = (C(z)+C(conj z))/2 = Re C(z), z = s+it.
Vec2 outer_chart_point(const AnalyticCurve& curve, double s, double t);

/// Omega(s,t) = [Re C'(z), Im C'(z)]/2, any curve kind.
double outer_omega(const AnalyticCurve& curve, double s, double t);

/// Closed-form outer distance charts of the catalog curves; t > 0.
/// Throws Error{DomainViolation}, Error{UnsupportedKind}.
OuterPoint outer_closed(const AnalyticCurve& curve, double s, double t);

/// Outer distance for any curve kind: catalog closed forms, or quadrature of
/// F_t(s,t) = [Im C(z), Im C'(z)] upward from F = 0 on the curve.
double outer_distance(const AnalyticCurve& curve, double s, double t);

// ---------------------------------------------------------------------------
// Monge-Ampere verification by finite differences through chart inversion
// ---------------------------------------------------------------------------

enum class ChartSide { Inner, Outer };

struct SampleRegion {
  double a0 = 0.0, a1 = 0.0;  // u (inner) or s (outer)
  double b0 = 0.0, b1 = 0.0;  // v (inner) or t (outer)
  int na = 5, nb = 5;
};

/// Region per curve where |omega| (resp. |Omega|) stays above the 0.05
/// degeneracy guard at desk scale.
SampleRegion default_region(const AnalyticCurve& curve, ChartSide side);

/// Inverts the chart near a seed by damped Newton with the analytic Jacobian.
/// Returns chart coordinates; throws Error{ChartInversionFailed}.
std::pair<double, double> invert_chart(const AnalyticCurve& curve, ChartSide side, Vec2 target,
                                       double seed_a, double seed_b);

/// Distance value at plane point x, via chart inversion seeded at (a,b).
double distance_at_plane_point(const AnalyticCurve& curve, ChartSide side, Vec2 x, double seed_a,
                               double seed_b);

/// Central-difference gradient / Hessian of the distance as a plane function,
/// at the chart point (a,b).
Vec2 plane_gradient_fd(const AnalyticCurve& curve, ChartSide side, double a, double b, double step);
struct Mat2 {
  double xx = 0.0, xy = 0.0, yy = 0.0;
  double det() const { return xx * yy - xy * xy; }
};
Mat2 plane_hessian_fd(const AnalyticCurve& curve, ChartSide side, double a, double b, double step);

/// Max |det D^2 f + 1| (inner) or |det D^2 F - 1| (outer) over the region,
/// skipping samples under the degeneracy guard.
double hessian_det_residual(const AnalyticCurve& curve, ChartSide side, const SampleRegion& region,
                            double step);

// ---------------------------------------------------------------------------
// isothermal tangent lines, outer area oracle, p <-> P correspondence
// ---------------------------------------------------------------------------

struct TangentCheckReport {
  /// |sin angle| between the trace direction and C' at the tangency points
  /// P(v0,v0) and P(u0,u0).
  double tangency_residual_start = 0.0;
  double tangency_residual_end = 0.0;
  /// Whether either trace meets the curve before its tangency point.
  bool crossing = false;
};

/// Traces the isothermal tangent lines P(u, v0) and P(u0, v) for
/// v0 <= u, v <= u0 and checks endpoint tangency and the non-crossing
/// property. Throws Error{DomainViolation} for u0 <= v0.
TangentCheckReport isothermal_tangent_check(const AnalyticCurve& curve, double u0, double v0,
                                            int n_samples);

struct OuterAreaResult {
  double region_area = 0.0;  // shoelace area between the two traces and the arc
  double F_value = 0.0;      // outer distance at P(u0,v0)
  double ratio = 0.0;        // region_area / F_value
};

/// Polygonal area of the region bounded by the isothermal tangent traces and
/// the curve arc C(r), v0 <= r <= u0, against the outer distance value.
/// Throws Error{CrossingTangents} when the traces meet the curve early.
OuterAreaResult outer_area_oracle(const AnalyticCurve& curve, double u0, double v0, int n_samples);

struct CorrespondencePair {
  Vec2 p;  // inner point p(u0,v0)
  Vec2 P;  // outer point P at (s,t) = ((u0+v0)/2, (u0-v0)/2)
};

/// The inner/outer point pair sharing tangency points C(u0), C(v0).
CorrespondencePair correspondence(const AnalyticCurve& curve, double u0, double v0);

/// Runs the full smooth identity suite for one curve; every residual is
/// checked against tol.
VerificationReport verify_smooth(const AnalyticCurve& curve, double tol);

}  // namespace areadist
