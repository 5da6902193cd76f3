#include "areadist/chord_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace areadist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Boundary loop of the region: the polyline's own edges plus, for open
// polylines, the closing chord c_{N-1} -> c_0 as the last edge.
struct Loop {
  const ConvexPolyline* poly;
  std::size_t edge_count;
  std::size_t closing_edge;  // == edge_count for closed polygons (none)

  explicit Loop(const ConvexPolyline& p)
      : poly(&p),
        edge_count(p.size()),
        closing_edge(p.closed() ? p.size() : p.size() - 1) {}

  Vec2 start(std::size_t k) const { return poly->vertex(k); }
  Vec2 dir(std::size_t k) const { return poly->vertex(k + 1) - poly->vertex(k); }
};

struct Cut {
  double area = 0.0;  // full area of the cut region
  Vec2 a, b;          // chord endpoints
};

// Minimum signed distance of p to the loop half-planes; > 0 inside.
double inside_margin(const Loop& loop, Vec2 p) {
  double m = kInf;
  for (std::size_t k = 0; k < loop.edge_count; ++k) {
    const Vec2 e = loop.dir(k);
    m = std::min(m, bracket2(e, p - loop.start(k)) / norm(e));
  }
  return m;
}

// Clips the line p + t*d against the convex loop and builds the cut region.
// nullopt: no admissible chord in this direction.
std::optional<Cut> cut_region(const ConvexPolyline& poly, Vec2 p, Vec2 d) {
  const Loop loop(poly);
  const double diam = poly.diameter();
  const std::size_t n_edges = loop.edge_count;

  double t_lo = -kInf, t_hi = kInf;
  std::size_t k_lo = 0, k_hi = 0;
  for (std::size_t k = 0; k < n_edges; ++k) {
    const Vec2 e = loop.dir(k);
    const double a = bracket2(e, d);
    const double b = bracket2(e, p - loop.start(k));
    if (std::abs(a) <= 1e-14 * norm(e)) {
      if (b < -1e-12 * norm(e) * diam) return std::nullopt;  // parallel, outside
      continue;
    }
    const double t = -b / a;
    if (a > 0.0) {
      if (t > t_lo) { t_lo = t; k_lo = k; }
    } else {
      if (t < t_hi) { t_hi = t; k_hi = k; }
    }
  }
  if (!(t_lo < kInf && t_hi > -kInf) || t_hi < t_lo - 1e-12 * diam) return std::nullopt;

  const Vec2 A = p + t_lo * d;
  const Vec2 B = p + t_hi * d;

  // arc position w = edge index + parameter along the edge, snapped to vertices
  auto arc_pos = [&](Vec2 x, std::size_t k) -> double {
    const Vec2 e = loop.dir(k);
    double s = dot(x - loop.start(k), e) / norm2(e);
    s = std::clamp(s, 0.0, 1.0);
    const double eps_s = 1e-9;
    if (s < eps_s) s = 0.0;
    if (s > 1.0 - eps_s) s = 1.0;
    double w = static_cast<double>(k) + s;
    const double period = static_cast<double>(n_edges);
    if (w >= period) w -= period;
    return w;
  };

  double w_a = arc_pos(A, k_lo);
  double w_b = arc_pos(B, k_hi);

  std::vector<Vec2> region;
  if (!poly.closed()) {
    // both endpoints must lie on the curve part (closing edge only at its ends)
    const double w_close = static_cast<double>(loop.closing_edge);
    if (w_a > w_close || w_b > w_close) return std::nullopt;
    double w1 = w_a, w2 = w_b;
    Vec2 x1 = A, x2 = B;
    if (w1 > w2) { std::swap(w1, w2); std::swap(x1, x2); }
    region.push_back(x1);
    for (std::size_t v = static_cast<std::size_t>(std::floor(w1)) + 1;
         static_cast<double>(v) < w2; ++v)
      region.push_back(poly.vertex(v));
    region.push_back(x2);
  } else {
    // side to the left of the directed line: walk the loop from exit to entry
    const double period = static_cast<double>(n_edges);
    const double d_arc = std::fmod(w_a - w_b + period, period);
    region.push_back(B);
    const std::size_t first = static_cast<std::size_t>(std::floor(w_b)) + 1;
    for (std::size_t m = 0;; ++m) {
      const double offset = static_cast<double>(first + m) - w_b;
      if (offset >= d_arc - 1e-9) break;
      region.push_back(poly.vertex((first + m) % n_edges));
    }
    region.push_back(A);
  }

  Cut cut;
  cut.a = A;
  cut.b = B;
  cut.area = polygon_area(region);
  return cut;
}

std::optional<Cut> cut_at_angle(const ConvexPolyline& poly, Vec2 p, double theta) {
  return cut_region(poly, p, Vec2{std::cos(theta), std::sin(theta)});
}

void require_inside(const ConvexPolyline& poly, Vec2 p) {
  const Loop loop(poly);
  if (inside_margin(loop, p) < -1e-9 * poly.diameter())
    throw Error(ErrorCode::PointOutside, "query point lies outside the region");
}

}  // namespace

double cut_half_area(const ConvexPolyline& poly, Vec2 p, double theta) {
  require_inside(poly, p);
  const auto cut = cut_at_angle(poly, p, theta);
  if (!cut)
    throw Error(ErrorCode::DegenerateChord, "no admissible chord in this direction");
  return 0.5 * cut->area;
}

ChordResult min_chord_area(const ConvexPolyline& poly, Vec2 p, int angular_samples,
                           int refine_iters) {
  if (angular_samples < 64)
    throw Error(ErrorCode::ParameterOutOfRange, "angular_samples must be >= 64");
  require_inside(poly, p);

  const double period = poly.closed() ? 2.0 * M_PI : M_PI;
  auto objective = [&](double theta) -> double {
    const auto cut = cut_at_angle(poly, p, theta);
    return cut ? 0.5 * cut->area : kInf;
  };

  double best_theta = 0.0, best_val = kInf;
  for (int k = 0; k < angular_samples; ++k) {
    const double theta = period * k / angular_samples;
    const double v = objective(theta);
    if (v < best_val) { best_val = v; best_theta = theta; }
  }
  if (!(best_val < kInf))
    throw Error(ErrorCode::NoValidChord, "no admissible chord for any direction");

  // golden-section refinement on the bracketing interval of the best sample
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - period / angular_samples;
  double hi = best_theta + period / angular_samples;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  for (int it = 0; it < refine_iters; ++it) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double theta_ref = f1 <= f2 ? x1 : x2;
  const double val_ref = std::min(f1, f2);
  if (val_ref < best_val) { best_val = val_ref; best_theta = theta_ref; }

  const auto cut = cut_at_angle(poly, p, best_theta);
  if (!cut) throw Error(ErrorCode::NoValidChord, "refined direction lost admissibility");
  ChordResult out;
  out.half_area = 0.5 * cut->area;
  out.endpoint_a = cut->a;
  out.endpoint_b = cut->b;
  out.midpoint_residual = norm(p - 0.5 * (cut->a + cut->b));
  return out;
}

}  // namespace areadist
