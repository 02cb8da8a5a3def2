#pragma once

#include <cmath>

#include "hmv/common.hpp"

namespace hmv {

// ---------------------------------------------------------------------------
// Second-order truncated Taylor scalar: value, gradient and Hessian with
// respect to nv seed variables. Propagating metric entries through this type
// yields g, dg and d2g exact to round-off, which is what keeps the identity
// residuals at quadrature precision.

struct Jet2 {
  double v = 0.0;
  Vec g;
  Mat h;

  Jet2() = default;
  explicit Jet2(int nv) : v(0.0), g(Vec::Zero(nv)), h(Mat::Zero(nv, nv)) {}
  Jet2(double value, int nv) : v(value), g(Vec::Zero(nv)), h(Mat::Zero(nv, nv)) {}

  static Jet2 variable(double value, int index, int nv) {
    Jet2 j(value, nv);
    j.g[index] = 1.0;
    return j;
  }
  static Jet2 constant(double value, int nv) { return Jet2(value, nv); }

  int vars() const { return static_cast<int>(g.size()); }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r.v += b.v;
  r.g += b.g;
  r.h += b.h;
  return r;
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r.v -= b.v;
  r.g -= b.g;
  r.h -= b.h;
  return r;
}
inline Jet2 operator-(const Jet2& a) {
  Jet2 r = a;
  r.v = -r.v;
  r.g = -r.g;
  r.h = -r.h;
  return r;
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r(a.vars());
  r.v = a.v * b.v;
  r.g = a.v * b.g + b.v * a.g;
  r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}
inline Jet2 operator+(const Jet2& a, double c) {
  Jet2 r = a;
  r.v += c;
  return r;
}
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }
inline Jet2 operator*(const Jet2& a, double c) {
  Jet2 r = a;
  r.v *= c;
  r.g *= c;
  r.h *= c;
  return r;
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }

// Composition with a scalar function given f(a.v), f'(a.v), f''(a.v).
inline Jet2 compose(const Jet2& a, double f, double df, double d2f) {
  Jet2 r(a.vars());
  r.v = f;
  r.g = df * a.g;
  r.h = df * a.h + d2f * (a.g * a.g.transpose());
  return r;
}

inline Jet2 inv(const Jet2& a) { return compose(a, 1.0 / a.v, -1.0 / (a.v * a.v), 2.0 / (a.v * a.v * a.v)); }
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return inv(a) * c; }

inline Jet2 sin(const Jet2& a) { return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet2 cos(const Jet2& a) { return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet2 sinh(const Jet2& a) { return compose(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Jet2 cosh(const Jet2& a) { return compose(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }
inline Jet2 exp(const Jet2& a) {
  double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline Jet2 log(const Jet2& a) { return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
inline Jet2 sqrt(const Jet2& a) {
  double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet2 tan(const Jet2& a) {
  double t = std::tan(a.v);
  double sec2 = 1.0 + t * t;
  return compose(a, t, sec2, 2.0 * t * sec2);
}
inline Jet2 tanh(const Jet2& a) {
  double t = std::tanh(a.v);
  double sech2 = 1.0 - t * t;
  return compose(a, t, sech2, -2.0 * t * sech2);
}
inline Jet2 atan(const Jet2& a) {
  double q = 1.0 + a.v * a.v;
  return compose(a, std::atan(a.v), 1.0 / q, -2.0 * a.v / (q * q));
}
inline Jet2 pow(const Jet2& a, double p) {
  double f = std::pow(a.v, p);
  return compose(a, f, p * std::pow(a.v, p - 1.0), p * (p - 1.0) * std::pow(a.v, p - 2.0));
}
inline Jet2 pow_int(const Jet2& a, long long e) {
  if (e == 0) return Jet2::constant(1.0, a.vars());
  bool neg = e < 0;
  unsigned long long k = neg ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Jet2 acc = Jet2::constant(1.0, a.vars());
  Jet2 base = a;
  while (k) {
    if (k & 1ull) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return neg ? inv(acc) : acc;
}

// ---------------------------------------------------------------------------
// First-order multi-directional dual number. Used to differentiate the unit
// normal of an immersion with respect to the surface parameters.

struct Dual {
  double v = 0.0;
  Vec d;

  Dual() = default;
  explicit Dual(int nd) : v(0.0), d(Vec::Zero(nd)) {}
  Dual(double value, int nd) : v(value), d(Vec::Zero(nd)) {}
  Dual(double value, const Vec& deriv) : v(value), d(deriv) {}

  static Dual constant(double value, int nd) { return Dual(value, nd); }
  int dirs() const { return static_cast<int>(d.size()); }
};

inline Dual operator+(const Dual& a, const Dual& b) { return Dual(a.v + b.v, a.d + b.d); }
inline Dual operator-(const Dual& a, const Dual& b) { return Dual(a.v - b.v, a.d - b.d); }
inline Dual operator-(const Dual& a) { return Dual(-a.v, -a.d); }
inline Dual operator*(const Dual& a, const Dual& b) { return Dual(a.v * b.v, a.v * b.d + b.v * a.d); }
inline Dual operator*(const Dual& a, double c) { return Dual(a.v * c, a.d * c); }
inline Dual operator*(double c, const Dual& a) { return a * c; }
inline Dual operator/(const Dual& a, const Dual& b) {
  double iv = 1.0 / b.v;
  return Dual(a.v * iv, (a.d - (a.v * iv) * b.d) * iv);
}
inline Dual operator/(const Dual& a, double c) { return a * (1.0 / c); }
inline Dual sqrt(const Dual& a) {
  double s = std::sqrt(a.v);
  return Dual(s, a.d * (0.5 / s));
}

}  // namespace hmv
