#pragma once

#include <cmath>

namespace areadist {

/// Complex value as an explicit real pair; no host complex type involved.
struct Cx {
  double re = 0.0;
  double im = 0.0;
};

inline Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator*(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Cx operator*(double s, Cx a) { return {s * a.re, s * a.im}; }
inline Cx conj(Cx a) { return {a.re, -a.im}; }

inline Cx cx_cos(Cx z) { return {std::cos(z.re) * std::cosh(z.im), -std::sin(z.re) * std::sinh(z.im)}; }
inline Cx cx_sin(Cx z) { return {std::sin(z.re) * std::cosh(z.im), std::cos(z.re) * std::sinh(z.im)}; }
inline Cx cx_exp(Cx z) {
  const double m = std::exp(z.re);
  return {m * std::cos(z.im), m * std::sin(z.im)};
}

}  // namespace areadist
