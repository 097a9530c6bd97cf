#pragma once

// Forward-mode jets in the two variables (t, r).
//
// Jet2 carries a value with all partials through second order and is the
// carrier for user-supplied parameter functions. Jet1 carries one order
// less and is used for quantities that already consumed one derivative
// (e.g. connection coefficients built from metric derivatives): their
// first-order slots stay exact, which is all the closed-form curvature
// needs.

#include <cmath>

namespace mag {

struct Jet1 {
  double v = 0.0;
  double dt = 0.0;
  double dr = 0.0;

  constexpr Jet1() = default;
  constexpr Jet1(double value) : v(value) {}
  constexpr Jet1(double value, double d_t, double d_r) : v(value), dt(d_t), dr(d_r) {}
};

struct Jet2 {
  double v = 0.0;
  double dt = 0.0;
  double dr = 0.0;
  double dtt = 0.0;
  double dtr = 0.0;
  double drr = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double value) : v(value) {}
  constexpr Jet2(double value, double d_t, double d_r, double d_tt, double d_tr,
                 double d_rr)
      : v(value), dt(d_t), dr(d_r), dtt(d_tt), dtr(d_tr), drr(d_rr) {}

  static constexpr Jet2 var_t(double t) { return Jet2(t, 1.0, 0.0, 0.0, 0.0, 0.0); }
  static constexpr Jet2 var_r(double r) { return Jet2(r, 0.0, 1.0, 0.0, 0.0, 0.0); }
};

constexpr Jet1 jet1(const Jet2& x) { return {x.v, x.dt, x.dr}; }

// Partial-derivative extraction: the jet of d_t f (resp. d_r f), one order down.
constexpr Jet1 d_t(const Jet2& x) { return {x.dt, x.dtt, x.dtr}; }
constexpr Jet1 d_r(const Jet2& x) { return {x.dr, x.dtr, x.drr}; }

// ---------------------------------------------------------------------------
// Jet1 arithmetic
// ---------------------------------------------------------------------------

constexpr Jet1 operator+(const Jet1& a, const Jet1& b) {
  return {a.v + b.v, a.dt + b.dt, a.dr + b.dr};
}
constexpr Jet1 operator-(const Jet1& a, const Jet1& b) {
  return {a.v - b.v, a.dt - b.dt, a.dr - b.dr};
}
constexpr Jet1 operator-(const Jet1& a) { return {-a.v, -a.dt, -a.dr}; }
constexpr Jet1 operator*(const Jet1& a, const Jet1& b) {
  return {a.v * b.v, a.dt * b.v + a.v * b.dt, a.dr * b.v + a.v * b.dr};
}
constexpr Jet1 operator/(const Jet1& a, const Jet1& b) {
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  return {q, (a.dt - q * b.dt) * inv, (a.dr - q * b.dr) * inv};
}
constexpr Jet1 operator+(const Jet1& a, double s) { return {a.v + s, a.dt, a.dr}; }
constexpr Jet1 operator+(double s, const Jet1& a) { return a + s; }
constexpr Jet1 operator-(const Jet1& a, double s) { return {a.v - s, a.dt, a.dr}; }
constexpr Jet1 operator-(double s, const Jet1& a) { return {s - a.v, -a.dt, -a.dr}; }
constexpr Jet1 operator*(const Jet1& a, double s) { return {a.v * s, a.dt * s, a.dr * s}; }
constexpr Jet1 operator*(double s, const Jet1& a) { return a * s; }
constexpr Jet1 operator/(const Jet1& a, double s) { return a * (1.0 / s); }
constexpr Jet1 operator/(double s, const Jet1& a) { return Jet1(s) / a; }

// h(f) with h' supplied
inline Jet1 compose(double h, double dh, const Jet1& f) {
  return {h, dh * f.dt, dh * f.dr};
}

inline Jet1 sin(const Jet1& x) { return compose(std::sin(x.v), std::cos(x.v), x); }
inline Jet1 cos(const Jet1& x) { return compose(std::cos(x.v), -std::sin(x.v), x); }
inline Jet1 exp(const Jet1& x) { return compose(std::exp(x.v), std::exp(x.v), x); }
inline Jet1 log(const Jet1& x) { return compose(std::log(x.v), 1.0 / x.v, x); }
inline Jet1 sqrt(const Jet1& x) {
  const double s = std::sqrt(x.v);
  return compose(s, 0.5 / s, x);
}
inline Jet1 sinh(const Jet1& x) { return compose(std::sinh(x.v), std::cosh(x.v), x); }
inline Jet1 cosh(const Jet1& x) { return compose(std::cosh(x.v), std::sinh(x.v), x); }
inline Jet1 tanh(const Jet1& x) {
  const double th = std::tanh(x.v);
  return compose(th, 1.0 - th * th, x);
}

// ---------------------------------------------------------------------------
// Jet2 arithmetic
// ---------------------------------------------------------------------------

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v,     a.dt + b.dt,   a.dr + b.dr,
          a.dtt + b.dtt, a.dtr + b.dtr, a.drr + b.drr};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v,     a.dt - b.dt,   a.dr - b.dr,
          a.dtt - b.dtt, a.dtr - b.dtr, a.drr - b.drr};
}
constexpr Jet2 operator-(const Jet2& a) {
  return {-a.v, -a.dt, -a.dr, -a.dtt, -a.dtr, -a.drr};
}
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.dt * b.v + a.v * b.dt,
          a.dr * b.v + a.v * b.dr,
          a.dtt * b.v + 2.0 * a.dt * b.dt + a.v * b.dtt,
          a.dtr * b.v + a.dt * b.dr + a.dr * b.dt + a.v * b.dtr,
          a.drr * b.v + 2.0 * a.dr * b.dr + a.v * b.drr};
}
constexpr Jet2 operator+(const Jet2& a, double s) {
  return {a.v + s, a.dt, a.dr, a.dtt, a.dtr, a.drr};
}
constexpr Jet2 operator+(double s, const Jet2& a) { return a + s; }
constexpr Jet2 operator-(const Jet2& a, double s) {
  return {a.v - s, a.dt, a.dr, a.dtt, a.dtr, a.drr};
}
constexpr Jet2 operator-(double s, const Jet2& a) { return -a + s; }
constexpr Jet2 operator*(const Jet2& a, double s) {
  return {a.v * s, a.dt * s, a.dr * s, a.dtt * s, a.dtr * s, a.drr * s};
}
constexpr Jet2 operator*(double s, const Jet2& a) { return a * s; }
constexpr Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }

// h(f) from h, h', h'' at f.v
inline Jet2 compose(double h, double dh, double ddh, const Jet2& f) {
  return {h,
          dh * f.dt,
          dh * f.dr,
          ddh * f.dt * f.dt + dh * f.dtt,
          ddh * f.dt * f.dr + dh * f.dtr,
          ddh * f.dr * f.dr + dh * f.drr};
}

inline Jet2 recip(const Jet2& x) {
  const double inv = 1.0 / x.v;
  return compose(inv, -inv * inv, 2.0 * inv * inv * inv, x);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }
inline Jet2 operator/(double s, const Jet2& a) { return recip(a) * s; }

inline Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.v), c = std::cos(x.v);
  return compose(s, c, -s, x);
}
inline Jet2 cos(const Jet2& x) {
  const double s = std::sin(x.v), c = std::cos(x.v);
  return compose(c, -s, -c, x);
}
inline Jet2 tan(const Jet2& x) {
  const double tn = std::tan(x.v);
  const double sec2 = 1.0 + tn * tn;
  return compose(tn, sec2, 2.0 * tn * sec2, x);
}
inline Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.v);
  return compose(e, e, e, x);
}
inline Jet2 log(const Jet2& x) {
  const double inv = 1.0 / x.v;
  return compose(std::log(x.v), inv, -inv * inv, x);
}
inline Jet2 sqrt(const Jet2& x) {
  const double s = std::sqrt(x.v);
  return compose(s, 0.5 / s, -0.25 / (s * x.v), x);
}
inline Jet2 sinh(const Jet2& x) {
  const double sh = std::sinh(x.v), ch = std::cosh(x.v);
  return compose(sh, ch, sh, x);
}
inline Jet2 cosh(const Jet2& x) {
  const double sh = std::sinh(x.v), ch = std::cosh(x.v);
  return compose(ch, sh, ch, x);
}
inline Jet2 tanh(const Jet2& x) {
  const double th = std::tanh(x.v);
  const double sech2 = 1.0 - th * th;
  return compose(th, sech2, -2.0 * th * sech2, x);
}

// x^n for integer n, valid for any base (negative included)
inline Jet2 pow_int(const Jet2& x, long long n) {
  if (n == 0) return Jet2(1.0);
  if (n < 0) return recip(pow_int(x, -n));
  Jet2 result(1.0);
  Jet2 base = x;
  unsigned long long e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1ull) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// x^y for positive base
inline Jet2 pow_general(const Jet2& x, const Jet2& y) { return exp(y * log(x)); }

}  // namespace mag
