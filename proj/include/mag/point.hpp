#pragma once

#include <cmath>

#include "mag/errors.hpp"

namespace mag {

// Coordinate labels, in the fixed index order used by every component array.
enum Coord : int { kT = 0, kR = 1, kTheta = 2, kPhi = 3 };

inline const char* coord_name(int mu) {
  static const char* names[4] = {"t", "r", "theta", "phi"};
  return names[mu];
}

// Spacetime point (t, r, theta, phi); r > 0, theta in (0, pi) off the axis.
struct Point {
  double t = 0.0;
  double r = 1.0;
  double theta = M_PI / 2;
  double phi = 0.0;

  double operator[](int mu) const {
    switch (mu) {
      case kT: return t;
      case kR: return r;
      case kTheta: return theta;
      default: return phi;
    }
  }

  Point shifted(int mu, double h) const {
    Point p = *this;
    switch (mu) {
      case kT: p.t += h; break;
      case kR: p.r += h; break;
      case kTheta: p.theta += h; break;
      default: p.phi += h; break;
    }
    return p;
  }

  bool valid() const {
    return r > 0.0 && theta > 0.0 && theta < M_PI &&
           std::fabs(std::sin(theta)) > 1e-12;
  }

  void require_valid() const {
    if (!valid())
      throw DomainError("point outside the chart (need r > 0 and theta off the axis)", 0);
  }
};

}  // namespace mag
