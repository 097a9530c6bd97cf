#pragma once

// Parameter-function sets of the spherically symmetric family. Arrays are
// 1-based (slot 0 unused) so the code reads like the component formulas.

#include <array>
#include <cmath>

#include "mag/expr.hpp"
#include "mag/jet.hpp"

namespace mag {

struct MetricParams {
  std::array<Expr, 5> g{};  // G1..G4

  static MetricParams minkowski_spherical() {
    MetricParams m;
    m.g[4] = Expr::parse("2*log(r)");
    return m;
  }
};

struct ConnParamsC {
  std::array<Expr, 21> c{};  // C1..C20
};

struct TQParams {
  std::array<Expr, 9> t{};   // T1..T8
  std::array<Expr, 13> q{};  // Q1..Q12
};

struct SpinParams {
  std::array<Expr, 21> s{};  // S1..S20
};

// Flat (Weitzenboeck) family; F1, F2, F5 must not vanish on the domain.
struct FlatParams {
  std::array<Expr, 7> f{};  // F1..F6
};

struct FlatMetricConstants {
  double g1 = 1.0;
  double g2 = 1.0;
};

// Coordinate functions ttilde(t,r), rtilde(t,r) for the Minkowski pullback.
struct CoordMapParams {
  Expr t_tilde = Expr::parse("t");
  Expr r_tilde = Expr::parse("r");
};

// Cosmological family: lapse, scale factor, K1..K5 (functions of t), and
// the spatial curvature sign k in {-1, 0, +1}.
struct CosmoParams {
  Expr lapse = Expr::parse("1");
  Expr scale = Expr::parse("1");
  std::array<Expr, 6> k_fn{};  // K1..K5
  int k = 0;
};

// ---------------------------------------------------------------------------
// Jet bundles
// ---------------------------------------------------------------------------

struct GJets {
  std::array<Jet2, 5> g{};  // G1..G4 with second-order partials
};

inline GJets eval_jets(const MetricParams& m, double t, double r) {
  GJets out;
  for (int i = 1; i <= 4; ++i) out.g[i] = m.g[i].eval_jet(t, r);
  return out;
}

// The twenty connection parameters as order-1 jets (value + first partials),
// which is exactly what the closed-form curvature consumes.
struct CJets {
  std::array<Jet1, 21> c{};
};

inline CJets eval_jets(const ConnParamsC& p, double t, double r) {
  CJets out;
  for (int i = 1; i <= 20; ++i) out.c[i] = jet1(p.c[i].eval_jet(t, r));
  return out;
}

struct TQJets {
  std::array<Jet1, 9> t{};
  std::array<Jet1, 13> q{};
};

inline TQJets eval_jets(const TQParams& p, double t, double r) {
  TQJets out;
  for (int i = 1; i <= 8; ++i) out.t[i] = jet1(p.t[i].eval_jet(t, r));
  for (int i = 1; i <= 12; ++i) out.q[i] = jet1(p.q[i].eval_jet(t, r));
  return out;
}

struct SJets {
  std::array<Jet1, 21> s{};
};

inline SJets eval_jets(const SpinParams& p, double t, double r) {
  SJets out;
  for (int i = 1; i <= 20; ++i) out.s[i] = jet1(p.s[i].eval_jet(t, r));
  return out;
}

struct FJets {
  std::array<Jet2, 7> f{};
};

inline FJets eval_jets(const FlatParams& p, double t, double r) {
  FJets out;
  for (int i = 1; i <= 6; ++i) out.f[i] = p.f[i].eval_jet(t, r);
  return out;
}

// Independent metric components (tt, tr, rr, theta-theta) as order-1 jets in
// (t, r); g_phph = hh sin^2(theta) is supplied analytically downstream.
struct MetricComponentJets {
  Jet1 tt, tr, rr, hh;
};

inline MetricComponentJets metric_component_jets(const GJets& gj) {
  const Jet2& g1 = gj.g[1];
  const Jet2& g2 = gj.g[2];
  const Jet2& g3 = gj.g[3];
  const Jet2& g4 = gj.g[4];
  MetricComponentJets out;
  out.tt = jet1(-exp(g1 + g2) * cos(g3));
  out.rr = jet1(exp(g1 - g2) * cos(g3));
  out.tr = jet1(exp(g1) * sin(g3));
  out.hh = jet1(exp(g4));
  return out;
}

}  // namespace mag
