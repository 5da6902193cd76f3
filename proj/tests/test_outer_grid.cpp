#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "areadist/outer_grid.hpp"
#include "testutil.hpp"

using namespace areadist;

TEST_CASE("seed_h equals the half-sides") {
  const ConvexPolyline para = testutil::parabola_samples(9);
  const std::vector<Vec2> row = seed_h(para);
  REQUIRE(row.size() == 8);
  for (std::size_t u = 0; u < row.size(); ++u) {
    CHECK(row[u].x == 0.5);
    CHECK(row[u].y == doctest::Approx((2.0 * u + 1.0) / 4.0).epsilon(1e-15));
  }

  const ConvexPolyline gon = testutil::regular_ngon(16);
  const std::vector<Vec2> gon_row = seed_h(gon);
  for (const Vec2& h : gon_row)
    CHECK(norm(h) == doctest::Approx(std::sin(M_PI / 16)).epsilon(1e-12));

  // telescoping: sides of a closed polygon sum to zero
  Vec2 sum{0, 0};
  for (const Vec2& h : gon_row) sum = sum + 2.0 * h;
  CHECK(norm(sum) <= 1e-14);
}

TEST_CASE("parabola integer samples: exact first rows") {
  const ConvexPolyline para = testutil::parabola_samples(13);
  const OuterGrid grid = propagate_outer(para, 5);

  // row 0 is the input curve with F = 0
  for (long u = 0; u <= 12; ++u) {
    CHECK(grid.X(u, 0) == static_cast<double>(u));
    CHECK(grid.Y(u, 0) == 0.5 * u * u);
    CHECK(grid.F(u, 0) == 0.0);
  }
  // row 1: F = 1/4 exactly, (X,Y) = (u, u^2/2 - 1/2) exactly
  for (long u = grid.row_begin(1); u <= grid.row_end(1); ++u) {
    CHECK(grid.F(u, 1) == 0.25);
    CHECK(grid.X(u, 1) == static_cast<double>(u));
    CHECK(grid.Y(u, 1) == 0.5 * u * u - 0.5);
  }
  // X, Y coincide with the continuous chart (u, (u^2-v^2)/2) for all rows
  for (long v = 0; v <= 5; ++v)
    for (long u = grid.row_begin(v); u <= grid.row_end(v); ++u) {
      CHECK(grid.X(u, v) == doctest::Approx(static_cast<double>(u)).epsilon(1e-9));
      CHECK(grid.Y(u, v) == doctest::Approx(0.5 * (u * u - v * v)).epsilon(1e-9));
    }
  // discrete F follows the hand-derived closed form (4v^3 - v)/12: the v-step
  // bracket telescopes over rows of constant h differences
  for (long v = 0; v <= 5; ++v)
    for (long u = grid.row_begin(v); u <= grid.row_end(v); ++u)
      CHECK(grid.F(u, v) == doctest::Approx((4.0 * v * v * v - v) / 12.0).epsilon(1e-12));
}

TEST_CASE("F differences along the curve row vanish") {
  const ConvexPolyline para = testutil::parabola_samples(9);
  const OuterGrid grid = propagate_outer(para, 2);
  // F(u+1,0) - F(u,0) = -[h(u+1/2,-1/2), h(u+1/2,1/2)] = -[-L_u, L_u] = 0
  for (long u = 0; u + 1 < 9; ++u) {
    CHECK(grid.F(u + 1, 0) - grid.F(u, 0) == 0.0);
    CHECK(bracket2(grid.h(u, -1), grid.h(u, 0)) == 0.0);
  }
}

TEST_CASE("integrability residual vanishes to rounding") {
  const OuterGrid para = propagate_outer(testutil::parabola_samples(13), 3);
  CHECK(integrability_residual(para) <= 1e-12);

  const OuterGrid gon = propagate_outer(testutil::regular_ngon(32), 5);
  CHECK(integrability_residual(gon) <= 1e-12);

  const OuterGrid single = propagate_outer(testutil::parabola_samples(9), 1);
  CHECK(integrability_residual(single) == 0.0);  // no interior plaquettes
}

TEST_CASE("verify_definite_sphere on parabola and regular polygons") {
  const OuterGrid para = propagate_outer(testutil::parabola_samples(13), 5);
  const SphereCheckReport rep = verify_definite_sphere(para, 1e-11);
  CHECK(rep.pass);
  CHECK(rep.max_coplanarity_residual <= 1e-11);
  CHECK(rep.max_cross_difference_xy_residual <= 1e-12);
  CHECK(rep.max_cross_difference_z_error <= 1e-11);

  const OuterGrid gon = propagate_outer(testutil::regular_ngon(16), 3);
  const SphereCheckReport grep = verify_definite_sphere(gon, 1e-11);
  CHECK(grep.pass);
  CHECK(grep.max_coplanarity_residual <= 1e-11);
}

TEST_CASE("discrete harmonicity and conormal identity on random polygons") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    const ConvexPolyline poly = trial % 2 == 0 ? testutil::random_closed_convex(rng, 12 + trial)
                                               : testutil::random_open_convex(rng, 13 + trial);
    const OuterGrid grid = propagate_outer(poly, poly.closed() ? 4 : 3);
    const SphereCheckReport rep = verify_definite_sphere(grid, 1e-10);
    CHECK(rep.pass);
    CHECK(conormal_identity_residual(grid) <= 1e-12);
  }
}

TEST_CASE("open diamond exhaustion") {
  const ConvexPolyline para = testutil::parabola_samples(5);  // admits (5-1)/2 = 2 levels
  CHECK_NOTHROW(propagate_outer(para, 2));
  try {
    propagate_outer(para, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LevelsOutOfRange);
  }
}

TEST_CASE("outward growth of F on catalog samples (reported, not asserted)") {
  // not a theorem; holds on these inputs and documents the orientation
  const OuterGrid gon = propagate_outer(testutil::regular_ngon(32), 5);
  for (long v = 1; v <= 5; ++v) CHECK(gon.F(0, v) > gon.F(0, v - 1));
}
