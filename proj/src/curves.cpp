#include "areadist/curves.hpp"

#include <cstdlib>
#include <sstream>

namespace areadist {

namespace {

std::vector<double> differentiate(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

double horner(const std::vector<double>& c, double r) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * r + c[k];
  return v;
}

Cx horner(const std::vector<double>& c, Cx z) {
  Cx v{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + Cx{c[k], 0.0};
  return v;
}

Cx pow2(Cx z) { return z * z; }
Cx pow3(Cx z) { return z * z * z; }

}  // namespace

AnalyticCurve AnalyticCurve::polynomial(std::vector<double> x_coeffs, std::vector<double> y_coeffs) {
  if (x_coeffs.empty() || y_coeffs.empty())
    throw Error(ErrorCode::UnsupportedKind, "polynomial curve needs nonempty coefficient lists");
  AnalyticCurve c(CurveKind::Polynomial);
  c.cx_ = std::move(x_coeffs);
  c.cy_ = std::move(y_coeffs);
  c.dcx_ = differentiate(c.cx_);
  c.dcy_ = differentiate(c.cy_);
  c.d2cx_ = differentiate(c.dcx_);
  c.d2cy_ = differentiate(c.dcy_);
  return c;
}

std::string AnalyticCurve::name() const {
  switch (kind_) {
    case CurveKind::Parabola: return "parabola";
    case CurveKind::Circle: return "circle";
    case CurveKind::Hyperbola: return "hyperbola";
    case CurveKind::Cubic: return "cubic";
    case CurveKind::Quartic: return "quartic";
    case CurveKind::Polynomial: return "polynomial";
  }
  return "?";
}

Vec2 AnalyticCurve::point(double r) const {
  switch (kind_) {
    case CurveKind::Parabola: return {r, 0.5 * r * r};
    case CurveKind::Circle: return {std::cos(r), std::sin(r)};
    case CurveKind::Hyperbola: return {std::exp(r), std::exp(-r)};
    case CurveKind::Cubic: return {r, r * r * r};
    case CurveKind::Quartic: return {r, r * r * r * r};
    case CurveKind::Polynomial: return {horner(cx_, r), horner(cy_, r)};
  }
  return {};
}

Vec2 AnalyticCurve::derivative(double r) const {
  switch (kind_) {
    case CurveKind::Parabola: return {1.0, r};
    case CurveKind::Circle: return {-std::sin(r), std::cos(r)};
    case CurveKind::Hyperbola: return {std::exp(r), -std::exp(-r)};
    case CurveKind::Cubic: return {1.0, 3.0 * r * r};
    case CurveKind::Quartic: return {1.0, 4.0 * r * r * r};
    case CurveKind::Polynomial: return {horner(dcx_, r), horner(dcy_, r)};
  }
  return {};
}

Vec2 AnalyticCurve::second_derivative(double r) const {
  switch (kind_) {
    case CurveKind::Parabola: return {0.0, 1.0};
    case CurveKind::Circle: return {-std::cos(r), -std::sin(r)};
    case CurveKind::Hyperbola: return {std::exp(r), std::exp(-r)};
    case CurveKind::Cubic: return {0.0, 6.0 * r};
    case CurveKind::Quartic: return {0.0, 12.0 * r * r};
    case CurveKind::Polynomial: return {horner(d2cx_, r), horner(d2cy_, r)};
  }
  return {};
}

CxVec2 AnalyticCurve::point_c(double s, double t) const {
  const Cx z{s, t};
  switch (kind_) {
    case CurveKind::Parabola: return {z, 0.5 * pow2(z)};
    case CurveKind::Circle: return {cx_cos(z), cx_sin(z)};
    case CurveKind::Hyperbola: return {cx_exp(z), cx_exp({-s, -t})};
    case CurveKind::Cubic: return {z, pow3(z)};
    case CurveKind::Quartic: return {z, pow2(pow2(z))};
    case CurveKind::Polynomial: return {horner(cx_, z), horner(cy_, z)};
  }
  return {};
}

CxVec2 AnalyticCurve::derivative_c(double s, double t) const {
  const Cx z{s, t};
  switch (kind_) {
    case CurveKind::Parabola: return {{1.0, 0.0}, z};
    case CurveKind::Circle: return {-1.0 * cx_sin(z), cx_cos(z)};
    case CurveKind::Hyperbola: return {cx_exp(z), -1.0 * cx_exp({-s, -t})};
    case CurveKind::Cubic: return {{1.0, 0.0}, 3.0 * pow2(z)};
    case CurveKind::Quartic: return {{1.0, 0.0}, 4.0 * pow3(z)};
    case CurveKind::Polynomial: return {horner(dcx_, z), horner(dcy_, z)};
  }
  return {};
}

CxVec2 AnalyticCurve::second_derivative_c(double s, double t) const {
  const Cx z{s, t};
  switch (kind_) {
    case CurveKind::Parabola: return {{0.0, 0.0}, {1.0, 0.0}};
    case CurveKind::Circle: return {-1.0 * cx_cos(z), -1.0 * cx_sin(z)};
    case CurveKind::Hyperbola: return {cx_exp(z), cx_exp({-s, -t})};
    case CurveKind::Cubic: return {{0.0, 0.0}, 6.0 * z};
    case CurveKind::Quartic: return {{0.0, 0.0}, 12.0 * pow2(z)};
    case CurveKind::Polynomial: return {horner(d2cx_, z), horner(d2cy_, z)};
  }
  return {};
}

AnalyticCurve parse_curve(const std::string& spec) {
  if (spec == "parabola") return AnalyticCurve::parabola();
  if (spec == "circle") return AnalyticCurve::circle();
  if (spec == "hyperbola") return AnalyticCurve::hyperbola();
  if (spec == "cubic") return AnalyticCurve::cubic();
  if (spec == "quartic") return AnalyticCurve::quartic();
  if (spec.rfind("poly:", 0) == 0) {
    const std::string body = spec.substr(5);
    const auto semi = body.find(';');
    if (semi == std::string::npos)
      throw Error(ErrorCode::UnsupportedKind,
                  "poly spec needs '<x coeffs>;<y coeffs>', got '" + spec + "'");
    auto parse_list = [&](const std::string& part) {
      std::vector<double> out;
      std::stringstream ss(part);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
          throw Error(ErrorCode::UnsupportedKind, "bad coefficient '" + tok + "'");
        out.push_back(v);
      }
      return out;
    };
    return AnalyticCurve::polynomial(parse_list(body.substr(0, semi)),
                                     parse_list(body.substr(semi + 1)));
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown curve '" + spec + "'");
}

}  // namespace areadist
