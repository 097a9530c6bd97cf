#pragma once

// Second-order forward jets in all four coordinates. Only the symmetry
// generators use these (their Lie derivative needs exact second partials of
// the vector field components); everything else works with the (t, r) jets.

#include <cmath>

namespace mag {

struct Jet4 {
  double v = 0.0;
  double d[4] = {0, 0, 0, 0};
  double dd[4][4] = {};  // symmetric

  constexpr Jet4() = default;
  constexpr Jet4(double value) : v(value) {}

  static Jet4 var(int mu, double value) {
    Jet4 x(value);
    x.d[mu] = 1.0;
    return x;
  }
};

inline Jet4 operator+(const Jet4& a, const Jet4& b) {
  Jet4 o(a.v + b.v);
  for (int i = 0; i < 4; ++i) {
    o.d[i] = a.d[i] + b.d[i];
    for (int j = 0; j < 4; ++j) o.dd[i][j] = a.dd[i][j] + b.dd[i][j];
  }
  return o;
}
inline Jet4 operator-(const Jet4& a, const Jet4& b) {
  Jet4 o(a.v - b.v);
  for (int i = 0; i < 4; ++i) {
    o.d[i] = a.d[i] - b.d[i];
    for (int j = 0; j < 4; ++j) o.dd[i][j] = a.dd[i][j] - b.dd[i][j];
  }
  return o;
}
inline Jet4 operator-(const Jet4& a) {
  Jet4 o(-a.v);
  for (int i = 0; i < 4; ++i) {
    o.d[i] = -a.d[i];
    for (int j = 0; j < 4; ++j) o.dd[i][j] = -a.dd[i][j];
  }
  return o;
}
inline Jet4 operator*(const Jet4& a, const Jet4& b) {
  Jet4 o(a.v * b.v);
  for (int i = 0; i < 4; ++i) o.d[i] = a.d[i] * b.v + a.v * b.d[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      o.dd[i][j] = a.dd[i][j] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.dd[i][j];
  return o;
}
inline Jet4 operator*(const Jet4& a, double s) {
  Jet4 o(a.v * s);
  for (int i = 0; i < 4; ++i) {
    o.d[i] = a.d[i] * s;
    for (int j = 0; j < 4; ++j) o.dd[i][j] = a.dd[i][j] * s;
  }
  return o;
}
inline Jet4 operator*(double s, const Jet4& a) { return a * s; }

inline Jet4 compose(double h, double dh, double ddh, const Jet4& f) {
  Jet4 o(h);
  for (int i = 0; i < 4; ++i) o.d[i] = dh * f.d[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o.dd[i][j] = ddh * f.d[i] * f.d[j] + dh * f.dd[i][j];
  return o;
}

inline Jet4 recip(const Jet4& x) {
  const double inv = 1.0 / x.v;
  return compose(inv, -inv * inv, 2.0 * inv * inv * inv, x);
}
inline Jet4 operator/(const Jet4& a, const Jet4& b) { return a * recip(b); }
inline Jet4 sin(const Jet4& x) {
  const double s = std::sin(x.v), c = std::cos(x.v);
  return compose(s, c, -s, x);
}
inline Jet4 cos(const Jet4& x) {
  const double s = std::sin(x.v), c = std::cos(x.v);
  return compose(c, -s, -c, x);
}
inline Jet4 sqrt(const Jet4& x) {
  const double s = std::sqrt(x.v);
  return compose(s, 0.5 / s, -0.25 / (s * x.v), x);
}

}  // namespace mag
