#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "areadist/curves.hpp"

using namespace areadist;

namespace {

// independent reference: evaluate through std::complex
std::pair<std::complex<double>, std::complex<double>> reference_point(const AnalyticCurve& c,
                                                                      std::complex<double> z) {
  using C = std::complex<double>;
  switch (c.kind()) {
    case CurveKind::Parabola: return {z, 0.5 * z * z};
    case CurveKind::Circle: return {std::cos(z), std::sin(z)};
    case CurveKind::Hyperbola: return {std::exp(z), std::exp(-z)};
    case CurveKind::Cubic: return {z, z * z * z};
    case CurveKind::Quartic: return {z, z * z * z * z};
    case CurveKind::Polynomial: {
      C x{0.0, 0.0}, y{0.0, 0.0};
      for (std::size_t k = c.x_coeffs().size(); k-- > 0;) x = x * z + c.x_coeffs()[k];
      for (std::size_t k = c.y_coeffs().size(); k-- > 0;) y = y * z + c.y_coeffs()[k];
      return {x, y};
    }
  }
  return {};
}

std::vector<AnalyticCurve> catalog() {
  return {AnalyticCurve::parabola(), AnalyticCurve::circle(), AnalyticCurve::hyperbola(),
          AnalyticCurve::cubic(), AnalyticCurve::quartic()};
}

}  // namespace

TEST_CASE("catalog parametrizations at real parameters") {
  const AnalyticCurve para = AnalyticCurve::parabola();
  CHECK(para.point(2.0).x == 2.0);
  CHECK(para.point(2.0).y == 2.0);
  const AnalyticCurve hyp = AnalyticCurve::hyperbola();
  CHECK(hyp.point(1.0).x == doctest::Approx(std::exp(1.0)));
  CHECK(hyp.point(1.0).y == doctest::Approx(std::exp(-1.0)));
  const AnalyticCurve quart = AnalyticCurve::quartic();
  CHECK(quart.point(-1.5).y == doctest::Approx(std::pow(1.5, 4)));
}

TEST_CASE("complex evaluation agrees with a std::complex reference") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  auto curves = catalog();
  curves.push_back(AnalyticCurve::polynomial({0.4, 1.0, -0.3, 0.05}, {-0.2, 0.1, 0.5, 0.0, 0.25}));
  for (const AnalyticCurve& c : curves)
    for (int k = 0; k < 40; ++k) {
      const double s = unif(rng), t = unif(rng);
      const auto [rx, ry] = reference_point(c, {s, t});
      const CxVec2 got = c.point_c(s, t);
      CHECK(got.x.re == doctest::Approx(rx.real()).epsilon(1e-12));
      CHECK(got.x.im == doctest::Approx(rx.imag()).epsilon(1e-12));
      CHECK(got.y.re == doctest::Approx(ry.real()).epsilon(1e-12));
      CHECK(got.y.im == doctest::Approx(ry.imag()).epsilon(1e-12));
    }
}

TEST_CASE("complex derivatives are consistent with finite differences in s") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto curves = catalog();
  curves.push_back(AnalyticCurve::polynomial({0.0, 1.0, 0.0, 1.0}, {0.0, 0.0, 0.5}));
  const double h = 1e-6;
  for (const AnalyticCurve& c : curves)
    for (int k = 0; k < 10; ++k) {
      const double s = unif(rng), t = unif(rng);
      const CxVec2 d = c.derivative_c(s, t);
      const CxVec2 plus = c.point_c(s + h, t), minus = c.point_c(s - h, t);
      CHECK(d.x.re == doctest::Approx((plus.x.re - minus.x.re) / (2 * h)).epsilon(1e-6));
      CHECK(d.y.im == doctest::Approx((plus.y.im - minus.y.im) / (2 * h)).epsilon(1e-6));
      const CxVec2 d2 = c.second_derivative_c(s, t);
      const CxVec2 dp = c.derivative_c(s + h, t), dm = c.derivative_c(s - h, t);
      CHECK(d2.y.re == doctest::Approx((dp.y.re - dm.y.re) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("conjugate symmetry: C(conj z) = conj C(z) for real coefficients") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto curves = catalog();
  curves.push_back(AnalyticCurve::polynomial({1.0, 2.0, 3.0}, {0.0, -1.0, 0.0, 2.0}));
  for (const AnalyticCurve& c : curves)
    for (int k = 0; k < 20; ++k) {
      const double s = unif(rng), t = unif(rng);
      const CxVec2 zc = c.point_c(s, t);
      const CxVec2 zb = c.point_c(s, -t);
      CHECK(zb.x.re == doctest::Approx(zc.x.re).epsilon(1e-13));
      CHECK(zb.x.im == doctest::Approx(-zc.x.im).epsilon(1e-13));
      CHECK(zb.y.re == doctest::Approx(zc.y.re).epsilon(1e-13));
      CHECK(zb.y.im == doctest::Approx(-zc.y.im).epsilon(1e-13));
    }
}

TEST_CASE("real-axis evaluation matches the real path") {
  for (const AnalyticCurve& c : catalog())
    for (double r : {-1.2, -0.3, 0.4, 1.7}) {
      const CxVec2 z = c.point_c(r, 0.0);
      CHECK(z.x.re == doctest::Approx(c.point(r).x).epsilon(1e-15));
      CHECK(z.y.re == doctest::Approx(c.point(r).y).epsilon(1e-15));
      CHECK(z.x.im == 0.0);
      CHECK(z.y.im == 0.0);
    }
}

TEST_CASE("parse_curve") {
  CHECK(parse_curve("parabola").kind() == CurveKind::Parabola);
  CHECK(parse_curve("quartic").kind() == CurveKind::Quartic);
  const AnalyticCurve poly = parse_curve("poly:0,1;0,0,0.5");
  CHECK(poly.kind() == CurveKind::Polynomial);
  CHECK(poly.point(3.0).x == 3.0);
  CHECK(poly.point(3.0).y == doctest::Approx(4.5));
  try {
    parse_curve("ellipse");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedKind);
  }
  try {
    parse_curve("poly:1,2");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedKind);
  }
}
