#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "areadist/chord_oracle.hpp"
#include "areadist/inner_grid.hpp"
#include "testutil.hpp"

using namespace areadist;

TEST_CASE("unit square center: every chord halves the area") {
  const ConvexPolyline square = validate_polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  const Vec2 center{0.5, 0.5};
  for (double theta : {0.0, 0.3, 1.0, 2.0, M_PI / 2, 3.0, 5.5})
    CHECK(cut_half_area(square, center, theta) == doctest::Approx(0.25).epsilon(1e-12));

  const ChordResult best = min_chord_area(square, center);
  CHECK(best.half_area == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(best.midpoint_residual <= 1e-9);
}

TEST_CASE("triangle polyline: chord along the closing direction") {
  const ConvexPolyline poly = validate_polyline({{0, 0}, {1, 0}, {2, 1}}, false);
  const double theta = std::atan2(1.0, 2.0);  // direction c_2 - c_0
  CHECK(cut_half_area(poly, {1.0, 0.5}, theta) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("parabola samples at p(0,2)") {
  const ConvexPolyline poly = testutil::parabola_samples(5);
  const Vec2 p{1.0, 1.0};  // (c_0 + c_2)/2
  const double theta = std::atan2(2.0, 2.0);
  CHECK(cut_half_area(poly, p, theta) == doctest::Approx(0.25).epsilon(1e-12));
  const ChordResult best = min_chord_area(poly, p);
  CHECK(best.half_area == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(best.midpoint_residual <= 1e-4 * poly.diameter());
}

TEST_CASE("errors: outside point, degenerate chord, bad sample count") {
  const ConvexPolyline poly = testutil::parabola_samples(5);
  try {
    cut_half_area(poly, {-3.0, 0.0}, 0.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointOutside);
  }
  // vertical line through p(1,3) exits through the closing chord
  try {
    cut_half_area(poly, {2.0, 2.5}, M_PI / 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateChord);
  }
  try {
    min_chord_area(poly, {2.0, 2.5}, 32);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterOutOfRange);
  }
}

TEST_CASE("oracle agrees with the grid at interior grid points") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const ConvexPolyline poly = testutil::random_open_convex(rng, 8 + trial);
    const std::size_t n = poly.size();
    const InnerGrid grid = build_inner_grid(poly, n - 1);
    const double d2 = poly.diameter() * poly.diameter();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n && j - i <= n - 2; ++j) {
        const ChordResult best = min_chord_area(poly, grid.p(i, j));
        CHECK(std::abs(best.half_area - grid.f(i, j)) <= 1e-6 * d2);
        CHECK(best.midpoint_residual <= 1e-4 * poly.diameter());
      }
  }
}

TEST_CASE("bilinear interpolation matches the oracle inside parallelograms") {
  std::mt19937_64 rng(43);
  const ConvexPolyline poly = testutil::random_open_convex(rng, 12);
  const InnerGrid grid = build_inner_grid(poly, 11);
  const double d2 = poly.diameter() * poly.diameter();
  std::uniform_real_distribution<double> unif(0.1, 0.9);
  for (int k = 0; k < 30; ++k) {
    const std::size_t i = rng() % 9;
    const std::size_t j = i + 2 + rng() % std::min<std::size_t>(9 - i, 8);
    if (!grid.has_cell(i + 1, j + 1) || j + 1 > poly.size() - 2) continue;
    const auto [point, value] = eval_bilinear(grid, i, j, unif(rng), unif(rng));
    const ChordResult best = min_chord_area(poly, point);
    CHECK(std::abs(best.half_area - value) <= 1e-5 * d2);
  }
}

TEST_CASE("scan+refine is self-consistent under denser sampling") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    const ConvexPolyline poly = testutil::random_open_convex(rng, 10 + trial);
    const InnerGrid grid = build_inner_grid(poly, poly.size() - 1);
    const Vec2 p = grid.p(1, 4);
    const ChordResult coarse = min_chord_area(poly, p, 64, 40);
    const ChordResult dense = min_chord_area(poly, p, 1024, 40);
    CHECK(std::abs(coarse.half_area - dense.half_area) <=
          1e-8 * poly.diameter() * poly.diameter());
  }
}

TEST_CASE("closed polygon: grid value reproduced at stored cells") {
  const ConvexPolyline gon = testutil::regular_ngon(12);
  const InnerGrid grid = build_inner_grid(gon, max_buildable_level(gon));
  const double d2 = gon.diameter() * gon.diameter();
  for (std::size_t i = 0; i < 12; i += 3)
    for (std::size_t k = 2; k + 2 <= grid.max_level(); ++k) {
      const ChordResult best = min_chord_area(gon, grid.p(i, i + k));
      CHECK(std::abs(best.half_area - grid.f(i, i + k)) <= 1e-6 * d2);
      CHECK(best.midpoint_residual <= 1e-4 * gon.diameter());
    }
}
