#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "areadist/inner_grid.hpp"
#include "testutil.hpp"

using namespace areadist;

TEST_CASE("triangle polyline: f(0,2) is half the triangle area") {
  const ConvexPolyline poly = validate_polyline({{0, 0}, {1, 0}, {2, 1}}, false);
  const InnerGrid grid = build_inner_grid(poly, 2);

  CHECK(grid.f(0, 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(grid.f(0, 2) == doctest::Approx(testutil::arc_half_area(poly, 0, 2)).epsilon(1e-15));
  const Vec2 p = grid.p(0, 2);
  CHECK(p.x == doctest::Approx(1.0));
  CHECK(p.y == doctest::Approx(0.5));
}

TEST_CASE("seed levels are exactly zero") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    const ConvexPolyline poly = testutil::random_open_convex(rng, 6 + 3 * k);
    const InnerGrid grid = build_inner_grid(poly, poly.size() - 1);
    for (std::size_t i = 0; i < poly.size(); ++i) CHECK(grid.f(i, i) == 0.0);
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) CHECK(grid.f(i, i + 1) == 0.0);
  }
}

TEST_CASE("parabola samples: level-2 cells and f(0,4)") {
  const ConvexPolyline poly = testutil::parabola_samples(5);
  const InnerGrid grid = build_inner_grid(poly, 4);
  for (std::size_t i = 0; i + 2 <= 4; ++i)
    CHECK(grid.f(i, i + 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(grid.f(0, 4) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(inner_f_direct(poly, 0, 4) == doctest::Approx(2.5).epsilon(1e-15));
  // independent shoelace oracle over the whole grid
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j)
      CHECK(grid.f(i, j) == doctest::Approx(testutil::arc_half_area(poly, i, j)).epsilon(1e-13));
}

TEST_CASE("recurrence equals direct sum and shoelace oracle on random polylines") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const ConvexPolyline poly = testutil::random_open_convex(rng, 5 + trial % 20);
    const std::size_t n = poly.size();
    const InnerGrid grid = build_inner_grid(poly, n - 1);
    double worst = 0.0, worst_shoelace = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        worst = std::max(worst, std::abs(grid.f(i, j) - inner_f_direct(poly, i, j)));
        worst_shoelace =
            std::max(worst_shoelace, std::abs(grid.f(i, j) - testutil::arc_half_area(poly, i, j)));
      }
    CHECK(worst <= 1e-9 * std::max(grid.max_f(), 1.0));
    CHECK(worst_shoelace <= 1e-9 * std::max(grid.max_f(), 1.0));
  }
}

TEST_CASE("monotonicity in level") {
  std::mt19937_64 rng(19);
  const ConvexPolyline poly = testutil::random_open_convex(rng, 20);
  const InnerGrid grid = build_inner_grid(poly, 19);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i + 1; j + 1 < 20; ++j)
      CHECK(grid.f(i, j + 1) > grid.f(i, j));
}

TEST_CASE("unimodular affine invariance and quadratic scaling") {
  std::mt19937_64 rng(23);
  const ConvexPolyline poly = testutil::random_open_convex(rng, 16);
  const InnerGrid grid = build_inner_grid(poly, 15);

  // det-1 affine map x -> M x + t
  const double m00 = 1.3, m01 = 0.4, m10 = -0.7, m11 = (1.0 + m01 * m10) / m00;
  std::vector<Vec2> mapped;
  for (const Vec2& c : poly.vertices())
    mapped.push_back({m00 * c.x + m01 * c.y + 3.0, m10 * c.x + m11 * c.y - 2.0});
  const InnerGrid grid2 = build_inner_grid(validate_polyline(mapped, false), 15);

  std::vector<Vec2> scaled;
  const double s = 2.5;
  for (const Vec2& c : poly.vertices()) scaled.push_back(s * c);
  const InnerGrid grid3 = build_inner_grid(validate_polyline(scaled, false), 15);

  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = i; j < 16; ++j) {
      const double f = grid.f(i, j);
      CHECK(grid2.f(i, j) == doctest::Approx(f).epsilon(1e-9));
      CHECK(grid3.f(i, j) == doctest::Approx(s * s * f).epsilon(1e-12));
    }
}

TEST_CASE("eval_bilinear corners and errors") {
  const ConvexPolyline poly = testutil::parabola_samples(5);
  const InnerGrid grid = build_inner_grid(poly, 4);

  const auto [p00, v00] = eval_bilinear(grid, 1, 2, 0.0, 0.0);
  CHECK(v00 == grid.f(1, 2));
  CHECK(norm(p00 - grid.p(1, 2)) == 0.0);
  const auto [p10, v10] = eval_bilinear(grid, 1, 2, 1.0, 0.0);
  CHECK(v10 == grid.f(2, 2));
  CHECK(norm(p10 - grid.p(2, 2)) <= 1e-15);
  const auto [p01, v01] = eval_bilinear(grid, 1, 2, 0.0, 1.0);
  CHECK(v01 == grid.f(1, 3));
  CHECK(norm(p01 - grid.p(1, 3)) <= 1e-15);
  const auto [p11, v11] = eval_bilinear(grid, 1, 2, 1.0, 1.0);
  CHECK(v11 == grid.f(2, 3));
  CHECK(norm(p11 - grid.p(2, 3)) <= 1e-15);

  try {
    eval_bilinear(grid, 1, 2, 1.5, 0.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterOutOfRange);
  }
  try {
    eval_bilinear(grid, 0, 4, 0.5, 0.5);  // corner (0,5) unstored
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CellNotStored);
  }
}

TEST_CASE("level errors") {
  const ConvexPolyline poly = testutil::parabola_samples(5);
  try {
    build_inner_grid(poly, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LevelOutOfRange);
  }
}

TEST_CASE("closed square: window cap and center value") {
  const ConvexPolyline square = validate_polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  CHECK(max_buildable_level(square) == 2);
  const InnerGrid grid = build_inner_grid(square, 2);
  // p(i,i+2) is the center; the chord through two opposite corners halves the square
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(grid.f(i, i + 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(norm(grid.p(i, i + 2) - Vec2{0.5, 0.5}) <= 1e-15);
  }
  try {
    build_inner_grid(square, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WindowTurningExceeded);
  }
}

TEST_CASE("closed grids match the direct sum") {
  const ConvexPolyline gon = testutil::regular_ngon(16);
  const std::size_t cap = max_buildable_level(gon);
  CHECK(cap == 8);
  const InnerGrid grid = build_inner_grid(gon, cap);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t k = 0; k <= cap; ++k)
      CHECK(grid.f(i, i + k) == doctest::Approx(inner_f_direct(gon, i, i + k)).epsilon(1e-12));

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    const ConvexPolyline poly = testutil::random_closed_convex(rng, 10 + 2 * trial);
    const std::size_t lv = max_buildable_level(poly);
    const InnerGrid g = build_inner_grid(poly, lv);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t k = 0; k <= lv; ++k)
        CHECK(g.f(i, i + k) ==
              doctest::Approx(inner_f_direct(poly, i, i + k)).epsilon(1e-9).scale(g.max_f()));
  }
}

TEST_CASE("verify_indefinite_sphere") {
  const ConvexPolyline poly = testutil::parabola_samples(5);
  const InnerGrid grid = build_inner_grid(poly, 4);
  const SphereCheckReport rep = verify_indefinite_sphere(grid, 1e-11);
  CHECK(rep.pass);
  CHECK(rep.max_coplanarity_residual <= 1e-12);
  CHECK(rep.max_cross_difference_xy_residual <= 1e-12);
  CHECK(rep.max_cross_difference_z_error <= 1e-12);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const ConvexPolyline p = testutil::random_open_convex(rng, 8 + trial * 4);
    const InnerGrid g = build_inner_grid(p, p.size() - 1);
    const SphereCheckReport r = verify_indefinite_sphere(g, 1e-11);
    CHECK(r.pass);
  }

  // closed polygons too
  const InnerGrid gon = build_inner_grid(testutil::regular_ngon(16), 8);
  CHECK(verify_indefinite_sphere(gon, 1e-11).pass);
}
