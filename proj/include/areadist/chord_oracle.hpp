#pragma once

#include "areadist/geom.hpp"

namespace areadist {

/// A chord through a query point and the half-area it cuts off.
struct ChordResult {
  double half_area = 0.0;
  Vec2 endpoint_a;
  Vec2 endpoint_b;
  /// Distance from the query point to the chord midpoint. Vanishes at the
  /// area-minimizing chord (the query point bisects it).
  double midpoint_residual = 0.0;
};

/// Half the area cut off by the chord through p with direction angle theta.
///
/// Open polylines are closed by the chord c_0 c_{N-1} to define the region;
/// the cut side is the one bounded by the chord and the curve part only, and
/// the chord is admissible only when both endpoints lie on the curve part.
/// Closed polygons take the side to the left of the directed line, so theta
/// in [0, 2*pi) covers both sides of every line.
///
/// Throws Error{PointOutside} if p lies outside, Error{DegenerateChord} if
/// the line yields no admissible chord.
double cut_half_area(const ConvexPolyline& poly, Vec2 p, double theta);

/// Definition-level inner area distance: minimizes cut_half_area over the
/// chord direction with a coarse scan (angular_samples >= 64) followed by
/// golden-section refinement of the best bracket. The midpoint residual of
/// the result is an independent optimality certificate.
///
/// Throws Error{PointOutside}, Error{NoValidChord}, Error{ParameterOutOfRange}.
ChordResult min_chord_area(const ConvexPolyline& poly, Vec2 p, int angular_samples = 64,
                           int refine_iters = 40);

}  // namespace areadist
