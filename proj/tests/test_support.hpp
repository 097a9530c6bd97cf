#pragma once

// Shared helpers for the test suites: deterministic random expressions that
// stay in-domain over the sample box, random points off the axis, and
// comparison utilities.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mag/expr.hpp"
#include "mag/params.hpp"
#include "mag/point.hpp"

namespace testsup {

using mag::Expr;

struct Box {
  double t_lo = 0.1, t_hi = 1.9;
  double r_lo = 1.0, r_hi = 3.0;
};

inline std::vector<mag::Point> sample_points(std::mt19937& rng, int n,
                                             const Box& box = {}) {
  std::uniform_real_distribution<double> ut(box.t_lo, box.t_hi);
  std::uniform_real_distribution<double> ur(box.r_lo, box.r_hi);
  std::uniform_real_distribution<double> uth(0.25, M_PI - 0.25);
  std::uniform_real_distribution<double> uph(0.0, 2.0 * M_PI);
  std::vector<mag::Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back({ut(rng), ur(rng), uth(rng), uph(rng)});
  return pts;
}

// Random expression source of bounded depth built from blocks that are
// well-defined for t in [0.05, 2] and r in [0.5, 3.5]. Candidates whose jets
// blow up are rejected by the caller.
inline std::string random_expr_source(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> coeff(-1.5, 1.5);
  auto num = [&] {
    char buf[32];
    snprintf(buf, sizeof(buf), "%.3f", coeff(rng));
    return std::string(buf[0] == '-' ? "(" : "") + buf + (buf[0] == '-' ? ")" : "");
  };
  if (depth <= 0) {
    switch (pick(rng) % 4) {
      case 0: return "t";
      case 1: return "r";
      case 2: return num();
      default: return "(t/2 + r/3)";
    }
  }
  auto sub = [&] { return random_expr_source(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: return "(" + sub() + " + " + sub() + ")";
    case 1: return "(" + sub() + " - " + sub() + ")";
    case 2: return "(" + num() + "*" + sub() + ")";
    case 3: return "sin(" + sub() + ")";
    case 4: return "cos(" + sub() + ")";
    case 5: return "tanh(" + sub() + ")";
    case 6: return "exp(sin(" + sub() + "))";
    case 7: return "log(2.5 + sin(" + sub() + "))";
    case 8: return "sqrt(3 + cos(" + sub() + "))";
    default: return "(" + sub() + ")/(3 + cos(" + sub() + "))";
  }
}

inline bool jets_bounded(const Expr& e, const std::vector<mag::Point>& pts,
                         double cap = 50.0) {
  for (const auto& p : pts) {
    mag::Jet2 j;
    try {
      j = e.eval_jet(p.t, p.r);
    } catch (...) {
      return false;
    }
    for (double v : {j.v, j.dt, j.dr, j.dtt, j.dtr, j.drr})
      if (!std::isfinite(v) || std::fabs(v) > cap) return false;
  }
  return true;
}

// Draws a random expression that stays bounded over a generic box.
inline Expr random_expr(std::mt19937& rng, int depth = 3) {
  std::mt19937 probe(12345);
  const auto pts = sample_points(probe, 12, Box{0.05, 2.0, 0.55, 3.45});
  for (;;) {
    Expr e = Expr::parse(random_expr_source(rng, depth));
    if (jets_bounded(e, pts)) return e;
  }
}

inline mag::MetricParams random_metric(std::mt19937& rng) {
  mag::MetricParams m;
  m.g[1] = random_expr(rng, 2);
  m.g[2] = random_expr(rng, 2);
  // keep cos(G3) away from zero and G3 itself away from zero
  m.g[3] = Expr::parse("0.4 + 0.45*tanh(" + random_expr(rng, 2).to_string() + ")");
  m.g[4] = Expr::parse("2*log(r) + 0.3*sin(" + random_expr(rng, 1).to_string() + ")");
  return m;
}

inline mag::ConnParamsC random_cparams(std::mt19937& rng) {
  mag::ConnParamsC c;
  for (int i = 1; i <= 20; ++i) c.c[i] = random_expr(rng, 2);
  return c;
}

inline mag::TQParams random_tq(std::mt19937& rng) {
  mag::TQParams tq;
  for (int i = 1; i <= 8; ++i) tq.t[i] = random_expr(rng, 2);
  for (int i = 1; i <= 12; ++i) tq.q[i] = random_expr(rng, 2);
  return tq;
}

inline mag::SpinParams random_spin(std::mt19937& rng) {
  mag::SpinParams s;
  for (int i = 1; i <= 20; ++i) s.s[i] = random_expr(rng, 2);
  return s;
}

inline double rel_err(double a, double b) {
  return std::fabs(a - b) / (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace testsup
