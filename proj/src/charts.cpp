#include "areadist/charts.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace areadist {

namespace {

// 16-point Gauss-Legendre rule on [-1,1] (positive half; symmetric).
constexpr int kGlHalf = 8;
constexpr double kGlX[kGlHalf] = {
    0.09501250983763744, 0.28160355077925891, 0.45801677765722739, 0.61787624440264375,
    0.75540440835500303, 0.86563120238783174, 0.94457502307323258, 0.98940093499164993};
constexpr double kGlW[kGlHalf] = {
    0.18945061045506850, 0.18260341504492359, 0.16915651939500254, 0.14959598881657673,
    0.12462897125553387, 0.09515851168249278, 0.06225352393864789, 0.02715245941175409};

// Composite 16-point Gauss-Legendre over [a,b].
template <typename F>
double integrate(F&& f, double a, double b, int panels = 4) {
  double total = 0.0;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * w;
    const double half = 0.5 * w;
    for (int k = 0; k < kGlHalf; ++k)
      total += half * kGlW[k] * (f(mid - half * kGlX[k]) + f(mid + half * kGlX[k]));
  }
  return total;
}

void require_inner_domain(double u, double v) {
  if (!(u > v))
    throw Error(ErrorCode::DomainViolation,
                "inner chart requires u > v, got u=" + std::to_string(u) +
                    " v=" + std::to_string(v));
}

void require_outer_domain(double t) {
  if (!(t > 0.0))
    throw Error(ErrorCode::DomainViolation, "outer chart requires t > 0, got t=" + std::to_string(t));
}

void require_catalog(const AnalyticCurve& curve) {
  if (!curve.in_catalog())
    throw Error(ErrorCode::UnsupportedKind,
                "no closed form for polynomial curves; use the numeric path");
}

double inner_f_closed(const AnalyticCurve& curve, double u, double v) {
  const double d = u - v;
  switch (curve.kind()) {
    case CurveKind::Parabola: return d * d * d / 24.0;
    case CurveKind::Circle: return 0.25 * (d - std::sin(d));
    case CurveKind::Hyperbola: return -0.5 * d + 0.25 * (std::exp(d) - std::exp(-d));
    case CurveKind::Cubic: return 0.125 * d * d * d * (u + v);
    case CurveKind::Quartic:
      return 0.25 * (0.6 * std::pow(u, 5) - 0.6 * std::pow(v, 5) -
                     std::pow(u, 4) * v + u * std::pow(v, 4));
    case CurveKind::Polynomial: break;
  }
  throw Error(ErrorCode::UnsupportedKind, "no inner closed form");
}

double outer_f_closed(const AnalyticCurve& curve, double s, double t) {
  switch (curve.kind()) {
    case CurveKind::Parabola: return t * t * t / 3.0;
    case CurveKind::Circle: return 0.5 * (0.5 * std::sinh(2.0 * t) - t);
    case CurveKind::Hyperbola: return t - 0.5 * std::sin(2.0 * t);
    case CurveKind::Cubic: return 2.0 * t * t * t * s;
    case CurveKind::Quartic: return 4.0 * s * s * t * t * t - 0.8 * std::pow(t, 5);
    case CurveKind::Polynomial: break;
  }
  throw Error(ErrorCode::UnsupportedKind, "no outer closed form");
}

double outer_omega_closed(const AnalyticCurve& curve, double s, double t) {
  switch (curve.kind()) {
    case CurveKind::Parabola: return 0.5 * t;
    case CurveKind::Circle: return 0.5 * std::sinh(t) * std::cosh(t);
    case CurveKind::Hyperbola: return 0.5 * std::sin(2.0 * t);
    case CurveKind::Cubic: return 3.0 * s * t;
    case CurveKind::Quartic: return 6.0 * s * s * t - 2.0 * t * t * t;
    case CurveKind::Polynomial: break;
  }
  throw Error(ErrorCode::UnsupportedKind, "no outer closed form");
}

// derivative formulas of the inner distance in asymptotic parameters
double inner_fu(const AnalyticCurve& c, double u, double v) {
  return 0.25 * bracket2(c.point(u) - c.point(v), c.derivative(u));
}
double inner_fv(const AnalyticCurve& c, double u, double v) {
  return 0.25 * bracket2(c.point(u) - c.point(v), c.derivative(v));
}

}  // namespace

Vec2 inner_chart_point(const AnalyticCurve& curve, double u, double v) {
  return 0.5 * (curve.point(u) + curve.point(v));
}

double inner_omega(const AnalyticCurve& curve, double u, double v) {
  return 0.25 * bracket2(curve.derivative(v), curve.derivative(u));
}

InnerPoint inner_closed(const AnalyticCurve& curve, double u, double v) {
  require_catalog(curve);
  require_inner_domain(u, v);
  InnerPoint out;
  out.f = inner_f_closed(curve, u, v);
  const Vec2 p = inner_chart_point(curve, u, v);
  out.q = {p.x, p.y, out.f};
  out.omega = inner_omega(curve, u, v);
  return out;
}

double inner_distance(const AnalyticCurve& curve, double u, double v) {
  require_inner_domain(u, v);
  if (curve.in_catalog()) return inner_f_closed(curve, u, v);
  // straight chart path from the diagonal point (m,m), where f = 0
  const double m = 0.5 * (u + v);
  const double du = u - m, dv = v - m;
  return integrate(
      [&](double tau) {
        const double uu = m + tau * du, vv = m + tau * dv;
        return inner_fu(curve, uu, vv) * du + inner_fv(curve, uu, vv) * dv;
      },
      0.0, 1.0);
}

Vec2 grad_f(const AnalyticCurve& curve, double u, double v) {
  require_inner_domain(u, v);
  return rot90(0.5 * (curve.point(v) - curve.point(u)));
}

AsymptoticCoeffs asymptotic_coeffs(const AnalyticCurve& curve, double u, double v) {
  require_inner_domain(u, v);
  AsymptoticCoeffs out;
  // a = [p_u, p_uu] and b = -[p_v, p_vv] with p(u,v) = (C(u)+C(v))/2
  auto a_uv = [&](double uu, double) {
    return bracket2(0.5 * curve.derivative(uu), 0.5 * curve.second_derivative(uu));
  };
  auto b_uv = [&](double, double vv) {
    return -bracket2(0.5 * curve.derivative(vv), 0.5 * curve.second_derivative(vv));
  };
  out.a = a_uv(u, v);
  out.b = b_uv(u, v);
  out.omega = inner_omega(curve, u, v);

  const double delta = 1e-4;
  out.a_v_residual = std::abs(a_uv(u, v + delta) - a_uv(u, v - delta)) / (2.0 * delta);
  out.b_u_residual = std::abs(b_uv(u + delta, v) - b_uv(u - delta, v)) / (2.0 * delta);
  const double fuv = (inner_distance(curve, u + delta, v + delta) -
                      inner_distance(curve, u + delta, v - delta) -
                      inner_distance(curve, u - delta, v + delta) +
                      inner_distance(curve, u - delta, v - delta)) /
                     (4.0 * delta * delta);
  out.omega_fuv_residual = std::abs(out.omega + fuv);
  return out;
}

double pick_invariant_inner(const AnalyticCurve& curve, double u, double v) {
  const AsymptoticCoeffs c = asymptotic_coeffs(curve, u, v);
  if (std::abs(c.omega) <= 1e-12)
    throw Error(ErrorCode::OmegaZero, "omega vanishes; Pick invariant undefined");
  return c.a * c.b / (c.omega * c.omega * c.omega);
}

std::pair<Vec2, Vec2> projections_pi(const AnalyticCurve& curve, double u, double v) {
  const Vec2 p = inner_chart_point(curve, u, v);
  const Vec2 rg = rot90(grad_f(curve, u, v));
  return {p + rg, p - rg};
}

Vec2 outer_chart_point(const AnalyticCurve& curve, double s, double t) {
  return curve.point_c(s, t).re();
}

double outer_omega(const AnalyticCurve& curve, double s, double t) {
  const CxVec2 d = curve.derivative_c(s, t);
  return 0.5 * bracket2(d.re(), d.im());
}

OuterPoint outer_closed(const AnalyticCurve& curve, double s, double t) {
  require_catalog(curve);
  require_outer_domain(t);
  OuterPoint out;
  out.F = outer_f_closed(curve, s, t);
  const Vec2 P = outer_chart_point(curve, s, t);
  out.Q = {P.x, P.y, out.F};
  out.Omega = outer_omega_closed(curve, s, t);
  return out;
}

double outer_distance(const AnalyticCurve& curve, double s, double t) {
  require_outer_domain(t);
  if (curve.in_catalog()) return outer_f_closed(curve, s, t);
  // integrate F_t = [Im C(z), Im C'(z)] up from the curve, where F = 0
  return integrate(
      [&](double tau) {
        return bracket2(curve.point_c(s, tau).im(), curve.derivative_c(s, tau).im());
      },
      0.0, t);
}

SampleRegion default_region(const AnalyticCurve& curve, ChartSide side) {
  if (side == ChartSide::Inner) {
    switch (curve.kind()) {
      case CurveKind::Parabola: return {0.5, 1.5, -1.5, -0.5};
      case CurveKind::Circle: return {0.3, 1.2, -1.2, -0.3};
      case CurveKind::Hyperbola: return {0.3, 1.0, -1.0, -0.3};
      case CurveKind::Cubic: return {1.0, 2.0, 0.3, 0.8};
      case CurveKind::Quartic: return {1.0, 2.0, 0.3, 0.8};
      case CurveKind::Polynomial: return {0.5, 1.5, -1.5, -0.5};
    }
  } else {
    switch (curve.kind()) {
      case CurveKind::Parabola: return {-1.0, 1.0, 0.3, 1.2};
      case CurveKind::Circle: return {0.0, M_PI / 2.0, 0.2, 1.0};
      case CurveKind::Hyperbola: return {0.2, 1.0, 0.3, 1.2};
      case CurveKind::Cubic: return {0.5, 1.5, 0.3, 1.0};
      case CurveKind::Quartic: return {0.8, 1.5, 0.3, 0.9};
      case CurveKind::Polynomial: return {-0.5, 0.5, 0.2, 0.6};
    }
  }
  return {};
}

std::pair<double, double> invert_chart(const AnalyticCurve& curve, ChartSide side, Vec2 target,
                                       double seed_a, double seed_b) {
  double a = seed_a, b = seed_b;
  const double tol = 1e-12 * (1.0 + norm(target));
  auto chart = [&](double aa, double bb) {
    return side == ChartSide::Inner ? inner_chart_point(curve, aa, bb)
                                    : outer_chart_point(curve, aa, bb);
  };
  Vec2 r = chart(a, b) - target;
  for (int it = 0; it < 50; ++it) {
    if (norm(r) <= tol) return {a, b};
    Vec2 ja, jb;  // Jacobian columns d chart / d a, d chart / d b
    if (side == ChartSide::Inner) {
      ja = 0.5 * curve.derivative(a);
      jb = 0.5 * curve.derivative(b);
    } else {
      const CxVec2 d = curve.derivative_c(a, b);
      ja = d.re();
      jb = -1.0 * d.im();
    }
    const double det = bracket2(ja, jb);
    if (std::abs(det) < 1e-300)
      throw Error(ErrorCode::ChartInversionFailed, "singular chart Jacobian");
    const double da = (-r.x * jb.y + r.y * jb.x) / det;
    const double db = (-ja.x * r.y + ja.y * r.x) / det;
    double lambda = 1.0;
    for (int halvings = 0; halvings < 25; ++halvings) {
      const Vec2 r_new = chart(a + lambda * da, b + lambda * db) - target;
      if (norm(r_new) < norm(r)) {
        a += lambda * da;
        b += lambda * db;
        r = r_new;
        break;
      }
      lambda *= 0.5;
      if (halvings == 24)
        throw Error(ErrorCode::ChartInversionFailed, "line search stalled");
    }
  }
  if (norm(r) <= tol) return {a, b};
  throw Error(ErrorCode::ChartInversionFailed,
              "Newton residual " + std::to_string(norm(r)) + " above tolerance");
}

double distance_at_plane_point(const AnalyticCurve& curve, ChartSide side, Vec2 x, double seed_a,
                               double seed_b) {
  const auto [a, b] = invert_chart(curve, side, x, seed_a, seed_b);
  return side == ChartSide::Inner ? inner_distance(curve, a, b) : outer_distance(curve, a, b);
}

Vec2 plane_gradient_fd(const AnalyticCurve& curve, ChartSide side, double a, double b, double step) {
  const Vec2 x0 = side == ChartSide::Inner ? inner_chart_point(curve, a, b)
                                           : outer_chart_point(curve, a, b);
  auto value = [&](double dx, double dy) {
    return distance_at_plane_point(curve, side, x0 + Vec2{dx, dy}, a, b);
  };
  return {(value(step, 0) - value(-step, 0)) / (2.0 * step),
          (value(0, step) - value(0, -step)) / (2.0 * step)};
}

Mat2 plane_hessian_fd(const AnalyticCurve& curve, ChartSide side, double a, double b, double step) {
  const Vec2 x0 = side == ChartSide::Inner ? inner_chart_point(curve, a, b)
                                           : outer_chart_point(curve, a, b);
  auto value = [&](double dx, double dy) {
    return distance_at_plane_point(curve, side, x0 + Vec2{dx, dy}, a, b);
  };
  const double c = value(0, 0);
  Mat2 h;
  h.xx = (value(step, 0) - 2.0 * c + value(-step, 0)) / (step * step);
  h.yy = (value(0, step) - 2.0 * c + value(0, -step)) / (step * step);
  h.xy = (value(step, step) - value(step, -step) - value(-step, step) + value(-step, -step)) /
         (4.0 * step * step);
  return h;
}

double hessian_det_residual(const AnalyticCurve& curve, ChartSide side, const SampleRegion& region,
                            double step) {
  const double target = side == ChartSide::Inner ? -1.0 : 1.0;
  double worst = 0.0;
  for (int i = 0; i < region.na; ++i)
    for (int j = 0; j < region.nb; ++j) {
      const double a = region.a0 + (region.a1 - region.a0) * (i + 0.5) / region.na;
      const double b = region.b0 + (region.b1 - region.b0) * (j + 0.5) / region.nb;
      const double om = side == ChartSide::Inner ? inner_omega(curve, a, b)
                                                 : outer_omega(curve, a, b);
      if (std::abs(om) <= 0.05) continue;  // degeneracy guard
      const Mat2 h = plane_hessian_fd(curve, side, a, b, step);
      worst = std::max(worst, std::abs(h.det() - target));
    }
  return worst;
}

namespace {

// P in the rotated isothermal coordinates u = s+t, v = s-t.
Vec2 trace_point(const AnalyticCurve& curve, double u, double v) {
  return outer_chart_point(curve, 0.5 * (u + v), 0.5 * (u - v));
}

double parallel_residual(Vec2 a, Vec2 b) {
  const double na = norm(a), nb = norm(b);
  if (na <= 0.0 || nb <= 0.0) return 1.0;
  return std::abs(bracket2(a, b)) / (na * nb);
}

// strict proper intersection of segments [a0,a1] and [b0,b1]
bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  const double scale = std::max({norm(a1 - a0), norm(b1 - b0), 1e-300});
  const double eps = 1e-12 * scale * scale;
  const double d1 = bracket2(a1 - a0, b0 - a0);
  const double d2 = bracket2(a1 - a0, b1 - a0);
  const double d3 = bracket2(b1 - b0, a0 - b0);
  const double d4 = bracket2(b1 - b0, a1 - b0);
  return ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
         ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
}

}  // namespace

TangentCheckReport isothermal_tangent_check(const AnalyticCurve& curve, double u0, double v0,
                                            int n_samples) {
  require_inner_domain(u0, v0);
  const int n = std::max(n_samples, 16);
  TangentCheckReport rep;

  // tangency: the traced line P(u, v0) ends at P(v0,v0) = C(v0) with its
  // limit direction parallel to C'(v0); likewise P(u0, v) at C(u0). The
  // limit secant is Richardson-extrapolated from the trace itself.
  const double eps = 1e-5 * (u0 - v0);
  auto limit_dir = [&](auto&& at) {
    const Vec2 base = at(0.0);
    const Vec2 s1 = (1.0 / eps) * (at(eps) - base);
    const Vec2 s2 = (2.0 / eps) * (at(0.5 * eps) - base);
    return 2.0 * s2 - s1;
  };
  rep.tangency_residual_start = parallel_residual(
      limit_dir([&](double e) { return trace_point(curve, v0 + e, v0); }), curve.derivative(v0));
  rep.tangency_residual_end = parallel_residual(
      limit_dir([&](double e) { return trace_point(curve, u0, u0 - e); }), curve.derivative(u0));

  // sampled traces, running from the shared corner to the tangency points
  std::vector<Vec2> trace_u(n + 1), trace_v(n + 1), arc(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double tau = static_cast<double>(k) / n;
    trace_u[k] = trace_point(curve, u0 + tau * (v0 - u0), v0);  // corner -> C(v0)
    trace_v[k] = trace_point(curve, u0, v0 + tau * (u0 - v0));  // corner -> C(u0)
    arc[k] = curve.point(v0 + tau * (u0 - v0));
  }

  // a trace crosses if it properly intersects the arc before its tangency
  // endpoint; the last few segments are excluded as the legitimate contact
  const int cut = std::max(2, n / 64);
  for (int k = 0; k < n - cut && !rep.crossing; ++k)
    for (int m = 0; m < n; ++m)
      if (segments_cross(trace_u[k], trace_u[k + 1], arc[m], arc[m + 1])) {
        rep.crossing = true;
        break;
      }
  for (int k = 0; k < n - cut && !rep.crossing; ++k)
    for (int m = 0; m < n; ++m)
      if (segments_cross(trace_v[k], trace_v[k + 1], arc[m], arc[m + 1])) {
        rep.crossing = true;
        break;
      }
  return rep;
}

OuterAreaResult outer_area_oracle(const AnalyticCurve& curve, double u0, double v0, int n_samples) {
  require_inner_domain(u0, v0);
  const TangentCheckReport tangents =
      isothermal_tangent_check(curve, u0, v0, std::min(n_samples, 2048));
  if (tangents.crossing)
    throw Error(ErrorCode::CrossingTangents,
                "isothermal tangent lines meet the curve before tangency");

  const int n = std::max(n_samples, 8);
  std::vector<Vec2> loop;
  loop.reserve(3 * n);
  // corner -> C(u0) along P(u0, v)
  for (int k = 0; k < n; ++k)
    loop.push_back(trace_point(curve, u0, v0 + (u0 - v0) * k / n));
  // C(u0) -> C(v0) along the curve
  for (int k = 0; k < n; ++k)
    loop.push_back(curve.point(u0 + (v0 - u0) * k / n));
  // C(v0) -> corner along P(u, v0)
  for (int k = 0; k < n; ++k)
    loop.push_back(trace_point(curve, v0 + (u0 - v0) * k / n, v0));

  OuterAreaResult out;
  out.region_area = polygon_area(loop);
  const double s = 0.5 * (u0 + v0), t = 0.5 * (u0 - v0);
  out.F_value = outer_distance(curve, s, t);
  out.ratio = out.region_area / out.F_value;
  return out;
}

CorrespondencePair correspondence(const AnalyticCurve& curve, double u0, double v0) {
  require_inner_domain(u0, v0);
  CorrespondencePair out;
  out.p = inner_chart_point(curve, u0, v0);
  out.P = outer_chart_point(curve, 0.5 * (u0 + v0), 0.5 * (u0 - v0));
  return out;
}

VerificationReport verify_smooth(const AnalyticCurve& curve, double tol) {
  VerificationReport rep;
  const double step = 1e-3;

  const SampleRegion inner = default_region(curve, ChartSide::Inner);
  const SampleRegion outer = default_region(curve, ChartSide::Outer);
  rep.add("det D2f inner (target -1)",
          hessian_det_residual(curve, ChartSide::Inner, inner, step), tol);
  rep.add("det D2F outer (target +1)",
          hessian_det_residual(curve, ChartSide::Outer, outer, step), tol);

  double grad_res = 0.0, fuv_res = 0.0, ab_res = 0.0, proj_res = 0.0, reality_res = 0.0;
  for (int i = 0; i < inner.na; ++i)
    for (int j = 0; j < inner.nb; ++j) {
      const double u = inner.a0 + (inner.a1 - inner.a0) * (i + 0.5) / inner.na;
      const double v = inner.b0 + (inner.b1 - inner.b0) * (j + 0.5) / inner.nb;
      if (std::abs(inner_omega(curve, u, v)) <= 0.05) continue;
      grad_res = std::max(grad_res,
                          norm(plane_gradient_fd(curve, ChartSide::Inner, u, v, step) -
                               grad_f(curve, u, v)));
      const AsymptoticCoeffs ac = asymptotic_coeffs(curve, u, v);
      fuv_res = std::max(fuv_res, ac.omega_fuv_residual);
      ab_res = std::max({ab_res, ac.a_v_residual, ac.b_u_residual});
      const auto [pi1, pi2] = projections_pi(curve, u, v);
      proj_res = std::max({proj_res, norm(pi1 - curve.point(u)), norm(pi2 - curve.point(v))});
    }
  for (int i = 0; i < outer.na; ++i)
    for (int j = 0; j < outer.nb; ++j) {
      const double s = outer.a0 + (outer.a1 - outer.a0) * (i + 0.5) / outer.na;
      const double t = outer.b0 + (outer.b1 - outer.b0) * (j + 0.5) / outer.nb;
      // P = (C(z) + C(conj z))/2 must be real for real-coefficient curves
      const CxVec2 cz = curve.point_c(s, t);
      const CxVec2 czb = curve.point_c(s, -t);
      const Vec2 im_part = 0.5 * (cz.im() + czb.im());
      const double scale = std::max(1.0, norm(cz.re()));
      reality_res = std::max(reality_res, norm(im_part) / scale);
    }
  rep.add("grad f formula vs finite differences", grad_res, tol);
  rep.add("f_uv + omega", fuv_res, tol);
  rep.add("a_v and b_u vanish", ab_res, tol);
  rep.add("projections pi1 = C(u), pi2 = C(v)", proj_res, tol);
  rep.add("outer chart reality", reality_res, tol);

  if (curve.in_catalog()) {
    const TangentCheckReport tangents = isothermal_tangent_check(
        curve, 0.5 * (inner.a0 + inner.a1), 0.5 * (inner.b0 + inner.b1), 512);
    rep.add("isothermal tangency parallelism",
            std::max(tangents.tangency_residual_start, tangents.tangency_residual_end), tol);
    rep.notes.push_back(std::string("isothermal tangents ") +
                        (tangents.crossing ? "cross the curve early" : "are non-crossing"));
  }
  return rep;
}

}  // namespace areadist
