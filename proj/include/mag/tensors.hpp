#pragma once

// Torsion, nonmetricity, contortion, disformation, Levi-Civita connection,
// the connection decomposition, and curvature. Each tensor is available via
// the closed-form component expressions and via a generic definitional path;
// tests assert the two agree.

#include <cmath>
#include <functional>

#include "mag/component_array.hpp"
#include "mag/geometry.hpp"
#include "mag/params.hpp"
#include "mag/point.hpp"

namespace mag {

// Point-indexed evaluators used by the finite-difference oracles.
using MetricEvaluator = std::function<ComponentArray(const Point&)>;  // rank 2, dd
using ConnEvaluator = std::function<ComponentArray(const Point&)>;    // rank 3, udd

inline MetricEvaluator make_metric_evaluator(const MetricField& f) {
  return [f](const Point& p) { return metric_components(f(p.t, p.r), p); };
}

inline ConnEvaluator make_conn_evaluator(const CField& f) {
  return [f](const Point& p) { return connection_components(f(p.t, p.r), p); };
}

inline constexpr double kFdStep = 1e-5;

// ---------------------------------------------------------------------------
// Torsion
// ---------------------------------------------------------------------------

inline ComponentArray torsion(const CJets& cj, const Point& p) {
  p.require_valid();
  const auto& c = cj.c;
  const double s = std::sin(p.theta);
  ComponentArray T({Variance::Up, Variance::Down, Variance::Down});
  auto set = [&T](int a, int b, int cc, double v) {
    T(a, b, cc) = v;
    T(a, cc, b) = -v;
  };
  set(kT, kT, kR, c[3].v - c[2].v);
  set(kR, kT, kR, c[7].v - c[6].v);
  set(kT, kTheta, kPhi, 2.0 * c[19].v * s);
  set(kR, kTheta, kPhi, 2.0 * c[20].v * s);
  set(kTheta, kT, kTheta, c[13].v - c[11].v);
  set(kPhi, kT, kPhi, c[13].v - c[11].v);
  set(kTheta, kR, kTheta, c[14].v - c[12].v);
  set(kPhi, kR, kPhi, c[14].v - c[12].v);
  set(kPhi, kT, kTheta, (c[17].v - c[15].v) / s);
  set(kTheta, kT, kPhi, -(c[17].v - c[15].v) * s);
  set(kPhi, kR, kTheta, (c[18].v - c[16].v) / s);
  set(kTheta, kR, kPhi, -(c[18].v - c[16].v) * s);
  return T;
}

// Definitional path: antisymmetrize the assembled coefficients.
inline ComponentArray torsion_definitional(const ComponentArray& conn) {
  ComponentArray T({Variance::Up, Variance::Down, Variance::Down});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) T(a, b, c) = conn(a, c, b) - conn(a, b, c);
  return T;
}

// ---------------------------------------------------------------------------
// Nonmetricity
// ---------------------------------------------------------------------------

// Assemble the all-down tensor from the twelve Q-parameters.
inline ComponentArray nonmetricity_from_q(const TQJets& tq, const Point& p) {
  const auto& q = tq.q;
  const double s = std::sin(p.theta);
  const double s2 = s * s;
  ComponentArray Q({Variance::Down, Variance::Down, Variance::Down});
  auto set = [&Q](int m, int n, int rr, double v) {
    Q(m, n, rr) = v;
    Q(m, rr, n) = v;
  };
  set(kT, kT, kT, q[1].v);
  set(kT, kR, kR, q[2].v);
  set(kT, kT, kR, q[3].v);
  set(kT, kTheta, kTheta, q[4].v);
  set(kT, kPhi, kPhi, q[4].v * s2);
  set(kR, kT, kT, q[5].v);
  set(kR, kR, kR, q[6].v);
  set(kR, kT, kR, q[7].v);
  set(kR, kTheta, kTheta, q[8].v);
  set(kR, kPhi, kPhi, q[8].v * s2);
  set(kTheta, kT, kTheta, q[9].v);
  set(kPhi, kT, kPhi, q[9].v * s2);
  set(kTheta, kR, kTheta, q[10].v);
  set(kPhi, kR, kPhi, q[10].v * s2);
  set(kTheta, kT, kPhi, q[11].v * s);
  set(kPhi, kT, kTheta, -q[11].v * s);
  set(kTheta, kR, kPhi, q[12].v * s);
  set(kPhi, kR, kTheta, -q[12].v * s);
  return Q;
}

inline ComponentArray nonmetricity(const GJets& gj, const CJets& cj, const Point& p) {
  p.require_valid();
  return nonmetricity_from_q(tq_from_c(gj, cj), p);
}

inline ComponentArray nonmetricity(const MetricParams& m, const ConnParamsC& cp,
                                   const Point& p) {
  return nonmetricity(eval_jets(m, p.t, p.r), eval_jets(cp, p.t, p.r), p);
}

// Definitional path: Q_{mu nu rho} = nabla_mu g_{nu rho} with central
// finite differences for the metric derivative.
inline ComponentArray nonmetricity_definitional(const MetricEvaluator& g,
                                                const ConnEvaluator& conn,
                                                const Point& p, double h = kFdStep) {
  const ComponentArray gp = g(p);
  const ComponentArray G = conn(p);
  ComponentArray Q({Variance::Down, Variance::Down, Variance::Down});
  for (int mu = 0; mu < 4; ++mu) {
    const ComponentArray gplus = g(p.shifted(mu, h));
    const ComponentArray gminus = g(p.shifted(mu, -h));
    for (int nu = 0; nu < 4; ++nu) {
      for (int rho = 0; rho < 4; ++rho) {
        double v = (gplus(nu, rho) - gminus(nu, rho)) / (2.0 * h);
        for (int s = 0; s < 4; ++s)
          v -= G(s, nu, mu) * gp(s, rho) + G(s, rho, mu) * gp(nu, s);
        Q(mu, nu, rho) = v;
      }
    }
  }
  return Q;
}

// ---------------------------------------------------------------------------
// Contortion and disformation (all-down)
// ---------------------------------------------------------------------------

inline ComponentArray contortion(const GJets& gj, const TQJets& tq, const Point& p) {
  p.require_valid();
  const auto& T = tq.t;
  const double e1 = std::exp(gj.g[1].v), e2 = std::exp(gj.g[2].v),
               e4 = std::exp(gj.g[4].v);
  const double s3 = std::sin(gj.g[3].v), c3 = std::cos(gj.g[3].v);
  const double st = std::sin(p.theta);
  const double s2 = st * st;
  ComponentArray K({Variance::Down, Variance::Down, Variance::Down});
  // each value appears antisymmetrized in the first index pair
  auto seta = [&K](int a, int b, int c, double v) {
    K(a, b, c) = v;
    K(b, a, c) = -v;
  };
  const double v1 = 0.5 * e1 * (T[4].v * s3 - T[3].v * e2 * c3) * st;
  seta(kT, kPhi, kTheta, v1);
  seta(kT, kTheta, kPhi, -v1);
  const double v3 = 0.5 * e1 * (T[3].v * s3 + T[4].v / e2 * c3) * st;
  seta(kR, kPhi, kTheta, v3);
  seta(kR, kTheta, kPhi, -v3);
  seta(kT, kR, kT, e1 * (T[2].v * s3 - T[1].v * e2 * c3));
  seta(kT, kR, kR, e1 * (T[1].v * s3 + T[2].v / e2 * c3));
  seta(kTheta, kPhi, kT, 0.5 * (2.0 * T[7].v * e4 + (T[4].v * s3 - T[3].v * e2 * c3) * e1) * st);
  seta(kTheta, kPhi, kR, 0.5 * (2.0 * T[8].v * e4 + (T[3].v * s3 + T[4].v / e2 * c3) * e1) * st);
  seta(kT, kTheta, kTheta, e4 * T[5].v);
  seta(kT, kPhi, kPhi, e4 * T[5].v * s2);
  seta(kR, kTheta, kTheta, e4 * T[6].v);
  seta(kR, kPhi, kPhi, e4 * T[6].v * s2);
  return K;
}

inline ComponentArray contortion(const MetricParams& m, const TQParams& tq,
                                 const Point& p) {
  return contortion(eval_jets(m, p.t, p.r), eval_jets(tq, p.t, p.r), p);
}

// Definitional path: K_{mu nu rho} = (T_{nu mu rho} + T_{rho mu nu} - T_{mu nu rho}) / 2
// with indices lowered by the metric.
inline ComponentArray contortion_definitional(const ComponentArray& g,
                                              const ComponentArray& torsion_ud) {
  double Td[4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double v = 0;
        for (int s = 0; s < 4; ++s) v += g(a, s) * torsion_ud(s, b, c);
        Td[a][b][c] = v;
      }
  ComponentArray K({Variance::Down, Variance::Down, Variance::Down});
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        K(m, n, r) = 0.5 * (Td[n][m][r] + Td[r][m][n] - Td[m][n][r]);
  return K;
}

inline ComponentArray disformation_from_q(const TQJets& tq, const Point& p) {
  const auto& q = tq.q;
  const double s = std::sin(p.theta);
  const double s2 = s * s;
  ComponentArray L({Variance::Down, Variance::Down, Variance::Down});
  auto sets = [&L](int a, int b, int c, double v) {
    L(a, b, c) = v;
    L(a, c, b) = v;
  };
  sets(kT, kT, kT, -0.5 * q[1].v);
  sets(kT, kR, kR, 0.5 * q[2].v - q[7].v);
  sets(kT, kTheta, kTheta, 0.5 * q[4].v - q[9].v);
  sets(kT, kPhi, kPhi, (0.5 * q[4].v - q[9].v) * s2);
  sets(kR, kR, kR, -0.5 * q[6].v);
  sets(kR, kT, kT, 0.5 * q[5].v - q[3].v);
  sets(kR, kTheta, kTheta, 0.5 * q[8].v - q[10].v);
  sets(kR, kPhi, kPhi, (0.5 * q[8].v - q[10].v) * s2);
  sets(kT, kT, kR, -0.5 * q[5].v);
  sets(kR, kT, kR, -0.5 * q[2].v);
  sets(kTheta, kT, kPhi, q[11].v * s);
  sets(kPhi, kT, kTheta, -q[11].v * s);
  sets(kTheta, kR, kPhi, q[12].v * s);
  sets(kPhi, kR, kTheta, -q[12].v * s);
  sets(kTheta, kT, kTheta, -0.5 * q[4].v);
  sets(kPhi, kT, kPhi, -0.5 * q[4].v * s2);
  sets(kTheta, kR, kTheta, -0.5 * q[8].v);
  sets(kPhi, kR, kPhi, -0.5 * q[8].v * s2);
  return L;
}

inline ComponentArray disformation(const MetricParams& m, const TQParams& tq,
                                   const Point& p) {
  p.require_valid();
  return disformation_from_q(eval_jets(tq, p.t, p.r), p);
}

// Definitional path (all-down): L_{mu nu rho} = (Q_{mu nu rho} - Q_{nu mu rho}
// - Q_{rho mu nu}) / 2.
inline ComponentArray disformation_definitional(const ComponentArray& Q) {
  ComponentArray L({Variance::Down, Variance::Down, Variance::Down});
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        L(m, n, r) = 0.5 * (Q(m, n, r) - Q(n, m, r) - Q(r, m, n));
  return L;
}

// ---------------------------------------------------------------------------
// Levi-Civita connection (all-down closed form)
// ---------------------------------------------------------------------------

inline ComponentArray levi_civita_all_down(const GJets& gj, const Point& p) {
  p.require_valid();
  const double g1t = gj.g[1].dt, g1r = gj.g[1].dr;
  const double g2t = gj.g[2].dt, g2r = gj.g[2].dr;
  const double g3t = gj.g[3].dt, g3r = gj.g[3].dr;
  const double g4t = gj.g[4].dt, g4r = gj.g[4].dr;
  const double e1 = std::exp(gj.g[1].v), e2 = std::exp(gj.g[2].v),
               e4 = std::exp(gj.g[4].v);
  const double s3 = std::sin(gj.g[3].v), c3 = std::cos(gj.g[3].v);
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  const double s2 = st * st;
  ComponentArray L({Variance::Down, Variance::Down, Variance::Down});
  auto setsym = [&L](int a, int b, int c, double v) {
    L(a, b, c) = v;
    L(a, c, b) = v;
  };
  setsym(kT, kT, kT, 0.5 * e1 * e2 * (g3t * s3 - (g1t + g2t) * c3));
  setsym(kT, kT, kR, 0.5 * e1 * e2 * (g3r * s3 - (g1r + g2r) * c3));
  setsym(kT, kR, kR,
         0.5 * e1 * ((2.0 * g3r - (g1t - g2t) / e2) * c3 + (2.0 * g1r + g3t / e2) * s3));
  setsym(kR, kT, kT,
         0.5 * e1 * ((2.0 * g3t + (g1r + g2r) * e2) * c3 + (2.0 * g1t - g3r * e2) * s3));
  setsym(kR, kT, kR, -0.5 * e1 / e2 * (g3t * s3 - (g1t - g2t) * c3));
  setsym(kR, kR, kR, -0.5 * e1 / e2 * (g3r * s3 - (g1r - g2r) * c3));
  setsym(kT, kTheta, kTheta, -0.5 * e4 * g4t);
  setsym(kTheta, kT, kTheta, 0.5 * e4 * g4t);
  setsym(kT, kPhi, kPhi, -0.5 * e4 * g4t * s2);
  setsym(kPhi, kT, kPhi, 0.5 * e4 * g4t * s2);
  setsym(kR, kTheta, kTheta, -0.5 * e4 * g4r);
  setsym(kTheta, kR, kTheta, 0.5 * e4 * g4r);
  setsym(kR, kPhi, kPhi, -0.5 * e4 * g4r * s2);
  setsym(kPhi, kR, kPhi, 0.5 * e4 * g4r * s2);
  setsym(kPhi, kTheta, kPhi, e4 * ct * st);
  setsym(kTheta, kPhi, kPhi, -e4 * ct * st);
  return L;
}

inline ComponentArray levi_civita_all_down(const MetricParams& m, const Point& p) {
  return levi_civita_all_down(eval_jets(m, p.t, p.r), p);
}

// Christoffel oracle from metric component jets: the all-down symbols
// (d_nu g_{mu rho} + d_rho g_{mu nu} - d_mu g_{nu rho}) / 2 with t,r
// derivatives from jets and the theta derivative analytic.
inline ComponentArray christoffel_all_down(const MetricComponentJets& mj, const Point& p) {
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  // dg[mu][nu][rho] = d_mu g_{nu rho}
  double dg[4][4][4] = {};
  auto fill = [&](int mu, double dtt, double dtr, double drr, double dhh, double dpp) {
    dg[mu][kT][kT] = dtt;
    dg[mu][kT][kR] = dg[mu][kR][kT] = dtr;
    dg[mu][kR][kR] = drr;
    dg[mu][kTheta][kTheta] = dhh;
    dg[mu][kPhi][kPhi] = dpp;
  };
  fill(kT, mj.tt.dt, mj.tr.dt, mj.rr.dt, mj.hh.dt, mj.hh.dt * st * st);
  fill(kR, mj.tt.dr, mj.tr.dr, mj.rr.dr, mj.hh.dr, mj.hh.dr * st * st);
  fill(kTheta, 0, 0, 0, 0, mj.hh.v * 2.0 * st * ct);
  ComponentArray L({Variance::Down, Variance::Down, Variance::Down});
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        L(m, n, r) = 0.5 * (dg[n][m][r] + dg[r][m][n] - dg[m][n][r]);
  return L;
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

inline ComponentArray raise_first_index(const ComponentArray& all_down,
                                        const ComponentArray& ginv) {
  ComponentArray out({Variance::Up, Variance::Down, Variance::Down});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double v = 0;
        for (int s = 0; s < 4; ++s) v += ginv(a, s) * all_down(s, b, c);
        out(a, b, c) = v;
      }
  return out;
}

// Gamma - (LC + K + L) in up-down-down form; the closed-form C's come from
// the substitution, the right-hand side from the decomposition displays.
inline ComponentArray decomposition_residual(const MetricParams& m, const TQParams& tq,
                                             const Point& p) {
  p.require_valid();
  const GJets gj = eval_jets(m, p.t, p.r);
  const TQJets tqj = eval_jets(tq, p.t, p.r);
  const ComponentArray gamma = connection_components(c_from_tq(gj, tqj), p);
  const ComponentArray g = metric_components(metric_component_jets(gj), p);
  const ComponentArray ginv = inverse_metric(g);
  const ComponentArray sum_down = levi_civita_all_down(gj, p) + contortion(gj, tqj, p) +
                                  disformation_from_q(tqj, p);
  return gamma - raise_first_index(sum_down, ginv);
}

// ---------------------------------------------------------------------------
// Curvature
// ---------------------------------------------------------------------------

// Closed-form curvature of the C-parametrized connection; antisymmetric in
// the last index pair by construction.
inline ComponentArray curvature_explicit(const CJets& cj, const Point& p) {
  p.require_valid();
  const auto& c = cj.c;
  const double st = std::sin(p.theta);
  const double s2 = st * st;
  auto v = [&](int i) { return c[i].v; };
  auto ddt = [&](int i) { return c[i].dt; };
  auto ddr = [&](int i) { return c[i].dr; };

  ComponentArray R({Variance::Up, Variance::Down, Variance::Down, Variance::Down});
  auto set = [&R](int a, int b, int m, int n, double val) {
    R(a, b, m, n) = val;
    R(a, b, n, m) = -val;
  };

  // algebraic block, last pair (theta, phi)
  set(kT, kT, kTheta, kPhi, 2.0 * (v(11) * v(19) - v(9) * v(15)) * st);
  set(kT, kR, kTheta, kPhi, 2.0 * (v(12) * v(19) - v(9) * v(16)) * st);
  set(kR, kT, kTheta, kPhi, 2.0 * (v(11) * v(20) - v(10) * v(15)) * st);
  set(kR, kR, kTheta, kPhi, 2.0 * (v(12) * v(20) - v(10) * v(16)) * st);
  const double diag = (v(9) * v(15) + v(10) * v(16) - v(11) * v(19) - v(12) * v(20)) * st;
  set(kTheta, kTheta, kTheta, kPhi, diag);
  set(kPhi, kPhi, kTheta, kPhi, diag);
  const double sphere = 1.0 + v(9) * v(11) + v(10) * v(12) + v(15) * v(19) + v(16) * v(20);
  set(kTheta, kPhi, kTheta, kPhi, sphere * s2);
  set(kPhi, kTheta, kTheta, kPhi, -sphere);

  // derivative block, last pair (t, r)
  set(kTheta, kTheta, kT, kR, ddt(14) - ddr(13));
  set(kPhi, kPhi, kT, kR, ddt(14) - ddr(13));
  set(kTheta, kPhi, kT, kR, -(ddt(18) - ddr(17)) * st);
  set(kPhi, kTheta, kT, kR, (ddt(18) - ddr(17)) / st);
  set(kT, kT, kT, kR, ddt(2) - ddr(1) + v(3) * v(6) - v(4) * v(5));
  set(kT, kR, kT, kR, ddt(4) - ddr(3) + v(4) * (v(1) - v(7)) - v(3) * (v(2) - v(8)));
  set(kR, kT, kT, kR, ddt(6) - ddr(5) + v(6) * (v(7) - v(1)) - v(5) * (v(8) - v(2)));
  set(kR, kR, kT, kR, ddt(8) - ddr(7) + v(4) * v(5) - v(3) * v(6));

  // mixed block
  const double a1 = ddt(9) + v(3) * v(10) - v(17) * v(19) + v(9) * (v(1) - v(13));
  set(kT, kTheta, kT, kTheta, a1);
  set(kT, kPhi, kT, kPhi, a1 * s2);
  const double a2 = ddr(9) + v(4) * v(10) - v(18) * v(19) + v(9) * (v(2) - v(14));
  set(kT, kTheta, kR, kTheta, a2);
  set(kT, kPhi, kR, kPhi, a2 * s2);
  const double a3 = ddt(10) + v(5) * v(9) - v(17) * v(20) + v(10) * (v(7) - v(13));
  set(kR, kTheta, kT, kTheta, a3);
  set(kR, kPhi, kT, kPhi, a3 * s2);
  const double a4 = ddr(10) + v(6) * v(9) - v(18) * v(20) + v(10) * (v(8) - v(14));
  set(kR, kTheta, kR, kTheta, a4);
  set(kR, kPhi, kR, kPhi, a4 * s2);
  const double b1 = ddt(11) - v(5) * v(12) - v(15) * v(17) + v(11) * (v(13) - v(1));
  set(kTheta, kT, kT, kTheta, b1);
  set(kPhi, kT, kT, kPhi, b1);
  const double b2 = ddr(11) - v(6) * v(12) - v(15) * v(18) + v(11) * (v(14) - v(2));
  set(kTheta, kT, kR, kTheta, b2);
  set(kPhi, kT, kR, kPhi, b2);
  const double b3 = ddt(12) - v(3) * v(11) - v(16) * v(17) + v(12) * (v(13) - v(7));
  set(kTheta, kR, kT, kTheta, b3);
  set(kPhi, kR, kT, kPhi, b3);
  // sibling-pattern reading of the last line of the mixed block
  const double b4 = ddr(12) - v(4) * v(11) - v(16) * v(18) + v(12) * (v(14) - v(8));
  set(kTheta, kR, kR, kTheta, b4);
  set(kPhi, kR, kR, kPhi, b4);

  const double e1 = ddt(19) + v(9) * v(17) + v(3) * v(20) + v(19) * (v(1) - v(13));
  set(kT, kTheta, kT, kPhi, -e1 * st);
  set(kT, kPhi, kT, kTheta, e1 * st);
  const double e2 = ddr(19) + v(9) * v(18) + v(4) * v(20) + v(19) * (v(2) - v(14));
  set(kT, kTheta, kR, kPhi, -e2 * st);
  set(kT, kPhi, kR, kTheta, e2 * st);
  const double e3 = ddt(20) + v(10) * v(17) + v(5) * v(19) + v(20) * (v(7) - v(13));
  set(kR, kTheta, kT, kPhi, -e3 * st);
  set(kR, kPhi, kT, kTheta, e3 * st);
  const double e4 = ddr(20) + v(10) * v(18) + v(6) * v(19) + v(20) * (v(8) - v(14));
  set(kR, kTheta, kR, kPhi, -e4 * st);
  set(kR, kPhi, kR, kTheta, e4 * st);
  const double f1 = ddt(15) + v(11) * v(17) - v(5) * v(16) + v(15) * (v(13) - v(1));
  set(kTheta, kT, kT, kPhi, -f1 * st);
  set(kPhi, kT, kT, kTheta, f1 / st);
  const double f2 = ddr(15) + v(11) * v(18) - v(6) * v(16) + v(15) * (v(14) - v(2));
  set(kTheta, kT, kR, kPhi, -f2 * st);
  set(kPhi, kT, kR, kTheta, f2 / st);
  const double f3 = ddt(16) + v(12) * v(17) - v(3) * v(15) + v(16) * (v(13) - v(7));
  set(kTheta, kR, kT, kPhi, -f3 * st);
  set(kPhi, kR, kT, kTheta, f3 / st);
  const double f4 = ddr(16) + v(12) * v(18) - v(4) * v(15) + v(16) * (v(14) - v(8));
  set(kTheta, kR, kR, kPhi, -f4 * st);
  set(kPhi, kR, kR, kTheta, f4 / st);
  return R;
}

inline ComponentArray curvature_explicit(const ConnParamsC& cp, const Point& p) {
  return curvature_explicit(eval_jets(cp, p.t, p.r), p);
}

// Definitional curvature with central finite differences for the coordinate
// derivatives of the coefficients.
inline ComponentArray curvature_generic(const ConnEvaluator& conn, const Point& p,
                                        double h = kFdStep) {
  p.require_valid();
  const ComponentArray G = conn(p);
  ComponentArray dG[4];  // dG[mu](rho, sigma, nu) = d_mu Gamma^rho_{sigma nu}
  for (int mu = 0; mu < 4; ++mu) {
    const ComponentArray plus = conn(p.shifted(mu, h));
    const ComponentArray minus = conn(p.shifted(mu, -h));
    ComponentArray d({Variance::Up, Variance::Down, Variance::Down});
    for (int i = 0; i < d.size(); ++i)
      d.at_flat(i) = (plus.at_flat(i) - minus.at_flat(i)) / (2.0 * h);
    dG[mu] = d;
  }
  ComponentArray R({Variance::Up, Variance::Down, Variance::Down, Variance::Down});
  for (int rho = 0; rho < 4; ++rho)
    for (int sig = 0; sig < 4; ++sig)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
          double v = dG[mu](rho, sig, nu) - dG[nu](rho, sig, mu);
          for (int tau = 0; tau < 4; ++tau)
            v += G(rho, tau, mu) * G(tau, sig, nu) - G(rho, tau, nu) * G(tau, sig, mu);
          R(rho, sig, mu, nu) = v;
          R(rho, sig, nu, mu) = -v;
        }
  return R;
}

}  // namespace mag
