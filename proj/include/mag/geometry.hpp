#pragma once

// Assembly of metric / connection / tetrad / spin-connection component arrays
// and the conversions between the C, (T,Q) and S parametrizations. All
// conversions act at jet level: inputs are evaluated jets, outputs carry the
// exact first partials the closed-form curvature needs.

#include <array>
#include <cmath>
#include <functional>

#include "mag/component_array.hpp"
#include "mag/errors.hpp"
#include "mag/jet.hpp"
#include "mag/linalg.hpp"
#include "mag/params.hpp"
#include "mag/point.hpp"

namespace mag {

using MetricField = std::function<MetricComponentJets(double t, double r)>;
using CField = std::function<CJets(double t, double r)>;

// ---------------------------------------------------------------------------
// Metric
// ---------------------------------------------------------------------------

inline ComponentArray metric_components(const MetricComponentJets& mj, const Point& p) {
  ComponentArray g({Variance::Down, Variance::Down});
  const double s = std::sin(p.theta);
  g(kT, kT) = mj.tt.v;
  g(kR, kR) = mj.rr.v;
  g(kT, kR) = g(kR, kT) = mj.tr.v;
  g(kTheta, kTheta) = mj.hh.v;
  g(kPhi, kPhi) = mj.hh.v * s * s;
  return g;
}

inline ComponentArray metric_components(const MetricParams& m, const Point& p) {
  p.require_valid();
  return metric_components(metric_component_jets(eval_jets(m, p.t, p.r)), p);
}

// Degeneracy indicator: the assembled metric is non-degenerate iff
// cos(G3) != 0 (and the angular factors are nonzero off the axis).
inline bool metric_nondegenerate(const MetricParams& m, const Point& p) {
  const Jet2 g3 = m.g[3].eval_jet(p.t, p.r);
  return std::fabs(std::cos(g3.v)) > 1e-14;
}

inline ComponentArray inverse_metric(const ComponentArray& g);

// Parameter-level inversion: degeneracy of the parametrization (cos G3 = 0,
// which collapses g_tt and g_rr) is a hard error here, per the contract that
// assembly merely warns but inversion refuses.
inline ComponentArray inverse_metric(const MetricParams& m, const Point& p) {
  if (!metric_nondegenerate(m, p))
    throw SingularMetric("metric parametrization degenerate: cos(G3) = 0");
  return inverse_metric(metric_components(m, p));
}

inline ComponentArray inverse_metric(const ComponentArray& g) {
  Mat4 m{}, inv{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a][b] = g(a, b);
  const double det = det4(m);
  if (std::fabs(det) < 1e-14) throw SingularMetric("metric determinant below 1e-14");
  invert4(m, inv);
  ComponentArray out({Variance::Up, Variance::Up});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a, b) = inv[a][b];
  return out;
}

inline MetricField make_field(const MetricParams& m) {
  return [m](double t, double r) {
    return metric_component_jets(eval_jets(m, t, r));
  };
}

// ---------------------------------------------------------------------------
// Connection from C-parameters
// ---------------------------------------------------------------------------

// All 64 coefficients at a point; last index is the derivative index.
inline ComponentArray connection_components(const CJets& cj, const Point& p) {
  p.require_valid();
  const auto& c = cj.c;
  const double s = std::sin(p.theta);
  const double co = std::cos(p.theta);
  ComponentArray G({Variance::Up, Variance::Down, Variance::Down});
  G(kT, kT, kT) = c[1].v;
  G(kT, kT, kR) = c[2].v;
  G(kT, kR, kT) = c[3].v;
  G(kT, kR, kR) = c[4].v;
  G(kT, kTheta, kTheta) = c[9].v;
  G(kR, kT, kT) = c[5].v;
  G(kR, kT, kR) = c[6].v;
  G(kR, kR, kT) = c[7].v;
  G(kR, kR, kR) = c[8].v;
  G(kR, kTheta, kTheta) = c[10].v;
  G(kPhi, kT, kPhi) = G(kTheta, kT, kTheta) = c[11].v;
  G(kPhi, kR, kPhi) = G(kTheta, kR, kTheta) = c[12].v;
  G(kPhi, kPhi, kT) = G(kTheta, kTheta, kT) = c[13].v;
  G(kPhi, kPhi, kR) = G(kTheta, kTheta, kR) = c[14].v;
  G(kPhi, kT, kTheta) = c[15].v / s;
  G(kTheta, kT, kPhi) = -c[15].v * s;
  G(kPhi, kR, kTheta) = c[16].v / s;
  G(kTheta, kR, kPhi) = -c[16].v * s;
  G(kPhi, kTheta, kT) = c[17].v / s;
  G(kTheta, kPhi, kT) = -c[17].v * s;
  G(kPhi, kTheta, kR) = c[18].v / s;
  G(kTheta, kPhi, kR) = -c[18].v * s;
  G(kT, kPhi, kTheta) = c[19].v * s;
  G(kT, kTheta, kPhi) = -c[19].v * s;
  G(kR, kPhi, kTheta) = c[20].v * s;
  G(kR, kTheta, kPhi) = -c[20].v * s;
  G(kT, kPhi, kPhi) = c[9].v * s * s;
  G(kR, kPhi, kPhi) = c[10].v * s * s;
  G(kPhi, kTheta, kPhi) = G(kPhi, kPhi, kTheta) = co / s;
  G(kTheta, kPhi, kPhi) = -s * co;
  return G;
}

inline ComponentArray connection_components(const ConnParamsC& cp, const Point& p) {
  return connection_components(eval_jets(cp, p.t, p.r), p);
}

inline CField make_field(const ConnParamsC& cp) {
  return [cp](double t, double r) { return eval_jets(cp, t, r); };
}

// ---------------------------------------------------------------------------
// C <-> (T, Q) conversion
// ---------------------------------------------------------------------------

// The twenty C-parameters from torsion/nonmetricity parameters. Three entries
// of the published substitution block are inconsistent with the torsion and
// nonmetricity displays it must reproduce (the brackets in C1, C9, C10); the
// forms below are the unique solution of that linear system and are pinned by
// the round-trip and decomposition tests.
inline CJets c_from_tq(const GJets& gj, const TQJets& tq) {
  const Jet1 g1 = jet1(gj.g[1]), g2 = jet1(gj.g[2]), g3 = jet1(gj.g[3]), g4 = jet1(gj.g[4]);
  const Jet1 g1t = d_t(gj.g[1]), g1r = d_r(gj.g[1]);
  const Jet1 g2t = d_t(gj.g[2]), g2r = d_r(gj.g[2]);
  const Jet1 g3t = d_t(gj.g[3]), g3r = d_r(gj.g[3]);
  const Jet1 g4t = d_t(gj.g[4]), g4r = d_r(gj.g[4]);
  const Jet1 e1 = exp(g1), e2 = exp(g2), e4 = exp(g4);
  const Jet1 s3 = sin(g3), c3 = cos(g3);
  const Jet1 s23 = sin(g3 * 2.0), c23 = cos(g3 * 2.0);
  const auto& T = tq.t;
  const auto& Q = tq.q;

  CJets out;
  auto& c = out.c;

  c[1] = 0.5 / e1 * (Q[1] / e2 * c3 + (Q[5] - 2.0 * Q[3]) * s3)
       + 0.25 * ((2.0 * T[1] + g1r + g2r) * e2 + g3t) * s23
       + 0.25 * g1t * (3.0 - c23) + 0.5 * g2t * c3 * c3
       - 0.5 * (2.0 * T[2] + g3r * e2) * s3 * s3;
  c[3] = 0.5 / e1 * (Q[5] / e2 * c3 - Q[2] * s3)
       - 0.25 * ((2.0 * T[2] - g1t + g2t) / e2 + g3r) * s23
       - 0.5 * g3t / e2 * s3 * s3 + 0.5 * (g1r + g2r + 2.0 * T[1]) * c3 * c3;
  c[4] = 0.5 / e1 * ((2.0 * Q[7] - Q[2]) / e2 * c3 - Q[6] * s3)
       - 0.25 * (2.0 * T[1] + g1r + g2r + g3t / e2) / e2 * s23
       - 0.25 * g3r / e2 * (3.0 + c23) + 0.5 * (g1t - g2t - 2.0 * T[2]) / (e2 * e2) * c3 * c3;
  c[5] = 0.5 / e1 * ((Q[5] - 2.0 * Q[3]) * e2 * c3 - Q[1] * s3)
       - 0.25 * (2.0 * T[2] - g1t + g2t + g3r * e2) * e2 * s23
       + 0.25 * g3t * e2 * (3.0 + c23) + 0.5 * (g1r + g2r + 2.0 * T[1]) * e2 * e2 * c3 * c3;
  c[6] = -0.5 / e1 * (Q[2] * e2 * c3 + Q[5] * s3)
       - 0.25 * ((2.0 * T[1] + g1r + g2r) * e2 + g3t) * s23
       + 0.5 * g3r * e2 * s3 * s3 + 0.5 * (g1t - g2t - 2.0 * T[2]) * c3 * c3;
  c[8] = 0.5 / e1 * ((Q[2] - 2.0 * Q[7]) * s3 - Q[6] * e2 * c3)
       + 0.25 * ((2.0 * T[2] - g1t + g2t) / e2 + g3r) * s23
       + 0.25 * g1r * (3.0 - c23) - 0.5 * g2r * c3 * c3
       + 0.5 * (2.0 * T[1] + g3t / e2) * s3 * s3;

  const Jet1 at = Q[4] - 2.0 * Q[9] + (2.0 * T[5] - g4t) * e4;
  const Jet1 ar = Q[8] - 2.0 * Q[10] + (2.0 * T[6] - g4r) * e4;
  c[9] = 0.5 / e1 * (ar * s3 - at / e2 * c3);
  c[10] = 0.5 / e1 * (at * s3 + ar * e2 * c3);

  c[13] = 0.5 * (g4t - Q[4] / e4);
  c[14] = 0.5 * (g4r - Q[8] / e4);
  c[15] = -0.5 / e4 * (2.0 * Q[11] + e1 * (T[4] * s3 - T[3] * e2 * c3));
  c[16] = -0.5 / e4 * (2.0 * Q[12] + e1 * (T[3] * s3 + T[4] / e2 * c3));

  c[11] = c[13] - T[5];
  c[12] = c[14] - T[6];
  c[2] = c[3] - T[1];
  c[7] = c[6] + T[2];
  c[17] = c[15] - T[7];
  c[18] = c[16] - T[8];
  c[19] = 0.5 * T[3];
  c[20] = 0.5 * T[4];
  return out;
}

// Read the torsion/nonmetricity parameters off a C-form connection.
inline TQJets tq_from_c(const GJets& gj, const CJets& cj) {
  const Jet1 g1t = d_t(gj.g[1]), g1r = d_r(gj.g[1]);
  const Jet1 g2t = d_t(gj.g[2]), g2r = d_r(gj.g[2]);
  const Jet1 g3t = d_t(gj.g[3]), g3r = d_r(gj.g[3]);
  const Jet1 g4t = d_t(gj.g[4]), g4r = d_r(gj.g[4]);
  const Jet1 e1 = exp(jet1(gj.g[1])), e2 = exp(jet1(gj.g[2])), e4 = exp(jet1(gj.g[4]));
  const Jet1 s3 = sin(jet1(gj.g[3])), c3 = cos(jet1(gj.g[3]));
  const auto& c = cj.c;

  TQJets out;
  out.t[1] = c[3] - c[2];
  out.t[2] = c[7] - c[6];
  out.t[3] = 2.0 * c[19];
  out.t[4] = 2.0 * c[20];
  out.t[5] = c[13] - c[11];
  out.t[6] = c[14] - c[12];
  out.t[7] = c[15] - c[17];
  out.t[8] = c[16] - c[18];

  out.q[1] = -e1 * ((2.0 * c[5] - e2 * g3t) * s3 - (2.0 * c[1] - g1t - g2t) * e2 * c3);
  out.q[5] = -e1 * ((2.0 * c[6] - e2 * g3r) * s3 - (2.0 * c[2] - g1r - g2r) * e2 * c3);
  out.q[2] = -e1 * ((2.0 * c[3] + g3t / e2) * s3 + (2.0 * c[7] - g1t + g2t) / e2 * c3);
  out.q[6] = -e1 * ((2.0 * c[4] + g3r / e2) * s3 + (2.0 * c[8] - g1r + g2r) / e2 * c3);
  out.q[3] = -e1 * ((c[1] + c[7] - g1t) * s3 - (c[3] * e2 - c[5] / e2 + g3t) * c3);
  out.q[7] = -e1 * ((c[2] + c[8] - g1r) * s3 - (c[4] * e2 - c[6] / e2 + g3r) * c3);
  out.q[4] = e4 * (g4t - 2.0 * c[13]);
  out.q[8] = e4 * (g4r - 2.0 * c[14]);
  out.q[9] = -c[11] * e4 - (c[10] * s3 - c[9] * e2 * c3) * e1;
  out.q[10] = -c[12] * e4 - (c[9] * s3 + c[10] / e2 * c3) * e1;
  out.q[11] = -(c[15] * e4 + (c[20] * s3 - c[19] * e2 * c3) * e1);
  out.q[12] = -(c[16] * e4 + (c[19] * s3 + c[20] / e2 * c3) * e1);
  return out;
}

inline CField make_tq_field(const MetricParams& m, const TQParams& tq) {
  return [m, tq](double t, double r) {
    return c_from_tq(eval_jets(m, t, r), eval_jets(tq, t, r));
  };
}

// Levi-Civita C-parameters: the T = Q = 0 instance of the substitution.
inline CJets lc_cjets(const GJets& gj) { return c_from_tq(gj, TQJets{}); }

inline CField make_lc_field(const MetricParams& m) {
  return [m](double t, double r) { return lc_cjets(eval_jets(m, t, r)); };
}

// ---------------------------------------------------------------------------
// Tetrad and spin connection
// ---------------------------------------------------------------------------

// theta^a_mu with Gtilde_i = G_i / 2; rows are the Lorentz index.
inline ComponentArray tetrad_components(const MetricParams& m, const Point& p) {
  p.require_valid();
  const GJets gj = eval_jets(m, p.t, p.r);
  const double h1 = gj.g[1].v / 2, h2 = gj.g[2].v / 2, h3 = gj.g[3].v / 2,
               h4 = gj.g[4].v / 2;
  ComponentArray th({Variance::Up, Variance::Down});  // (Lorentz up, coord down)
  th(0, kT) = std::exp(h1 + h2) * std::cos(h3);
  th(0, kR) = -std::exp(h1 - h2) * std::sin(h3);
  th(1, kT) = std::exp(h1 + h2) * std::sin(h3);
  th(1, kR) = std::exp(h1 - h2) * std::cos(h3);
  th(2, kTheta) = std::exp(h4);
  th(3, kPhi) = std::exp(h4) * std::sin(p.theta);
  return th;
}

// omega^a_{b mu} with the S-parameters; mu is the coordinate (last) index.
inline ComponentArray spin_connection_components(const SpinParams& sp, const Point& p) {
  p.require_valid();
  const SJets sj = eval_jets(sp, p.t, p.r);
  const auto& s = sj.s;
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  ComponentArray om({Variance::Up, Variance::Down, Variance::Down});
  om(0, 0, kT) = s[1].v;
  om(0, 0, kR) = s[2].v;
  om(0, 1, kT) = s[3].v;
  om(0, 1, kR) = s[4].v;
  om(1, 0, kT) = s[5].v;
  om(1, 0, kR) = s[6].v;
  om(1, 1, kT) = s[7].v;
  om(1, 1, kR) = s[8].v;
  om(3, 2, kPhi) = ct;
  om(2, 3, kPhi) = -ct;
  om(0, 2, kTheta) = s[9].v;
  om(0, 3, kPhi) = s[9].v * st;
  om(1, 2, kTheta) = s[10].v;
  om(1, 3, kPhi) = s[10].v * st;
  om(2, 0, kTheta) = s[11].v;
  om(3, 0, kPhi) = s[11].v * st;
  om(2, 1, kTheta) = s[12].v;
  om(3, 1, kPhi) = s[12].v * st;
  om(2, 2, kT) = om(3, 3, kT) = s[13].v;
  om(2, 2, kR) = om(3, 3, kR) = s[14].v;
  om(3, 0, kTheta) = s[15].v;
  om(2, 0, kPhi) = -s[15].v * st;
  om(3, 1, kTheta) = s[16].v;
  om(2, 1, kPhi) = -s[16].v * st;
  om(3, 2, kT) = s[17].v;
  om(2, 3, kT) = -s[17].v;
  om(3, 2, kR) = s[18].v;
  om(2, 3, kR) = -s[18].v;
  om(0, 3, kTheta) = s[19].v;
  om(0, 2, kPhi) = -s[19].v * st;
  om(1, 3, kTheta) = s[20].v;
  om(1, 2, kPhi) = -s[20].v * st;
  return om;
}

// C-parameters from the S-parametrization. The mixing signs in the C11/C12
// and C15/C16 pairs follow from inserting the tetrad and spin connection into
// the defining relation for the coefficients (they differ from the published
// relation block, which does not reproduce that definition).
inline CJets c_from_s(const GJets& gj, const SJets& sj) {
  const Jet2 h1 = gj.g[1] * 0.5, h2 = gj.g[2] * 0.5, h3 = gj.g[3] * 0.5,
             h4 = gj.g[4] * 0.5;
  const Jet1 h1t = d_t(h1), h1r = d_r(h1);
  const Jet1 h2t = d_t(h2), h2r = d_r(h2);
  const Jet1 h3t = d_t(h3), h3r = d_r(h3);
  const Jet1 h4t = d_t(h4), h4r = d_r(h4);
  const Jet1 s3 = sin(jet1(h3)), c3 = cos(jet1(h3));
  const Jet1 s2d = sin(jet1(h3) * 2.0);
  const Jet1 c2 = c3 * c3, s2 = s3 * s3;
  const Jet1 em2 = exp(jet1(h2) * (-2.0)), ep2 = exp(jet1(h2) * 2.0);
  const Jet1 eA = exp(jet1(h4) - jet1(h1) - jet1(h2));  // e^{h4-h1-h2}
  const Jet1 eB = exp(jet1(h1) + jet1(h2) - jet1(h4));
  const Jet1 eC = exp(jet1(h4) - jet1(h1) + jet1(h2));
  const Jet1 eD = exp(jet1(h1) - jet1(h2) - jet1(h4));
  const auto& s = sj.s;

  CJets out;
  auto& c = out.c;
  c[1] = s[1] * c2 + 0.5 * (s[3] + s[5]) * s2d + s[7] * s2 + h1t + h2t;
  c[2] = s[2] * c2 + 0.5 * (s[4] + s[6]) * s2d + s[8] * s2 + h1r + h2r;
  c[3] = (s[3] * c2 + 0.5 * (s[7] - s[1]) * s2d - s[5] * s2 - h3t) * em2;
  c[4] = (s[4] * c2 + 0.5 * (s[8] - s[2]) * s2d - s[6] * s2 - h3r) * em2;
  c[5] = (s[5] * c2 + 0.5 * (s[7] - s[1]) * s2d - s[3] * s2 + h3t) * ep2;
  c[6] = (s[6] * c2 + 0.5 * (s[8] - s[2]) * s2d - s[4] * s2 + h3r) * ep2;
  c[7] = s[7] * c2 - 0.5 * (s[3] + s[5]) * s2d + s[1] * s2 + h1t - h2t;
  c[8] = s[8] * c2 - 0.5 * (s[4] + s[6]) * s2d + s[2] * s2 + h1r - h2r;
  c[9] = (s[10] * s3 + s[9] * c3) * eA;
  c[10] = (s[10] * c3 - s[9] * s3) * eC;
  c[11] = (s[11] * c3 + s[12] * s3) * eB;
  c[12] = (s[12] * c3 - s[11] * s3) * eD;
  c[19] = (s[20] * s3 + s[19] * c3) * eA;
  c[20] = (s[20] * c3 - s[19] * s3) * eC;
  c[15] = (s[15] * c3 + s[16] * s3) * eB;
  c[16] = (s[16] * c3 - s[15] * s3) * eD;
  c[13] = s[13] + h4t;
  c[14] = s[14] + h4r;
  c[17] = s[17];
  c[18] = s[18];
  return out;
}

inline CField make_spin_field(const MetricParams& m, const SpinParams& sp) {
  return [m, sp](double t, double r) {
    return c_from_s(eval_jets(m, t, r), eval_jets(sp, t, r));
  };
}

// Runtime bundle every numeric consumer works against, independent of which
// parametrization the geometry was specified in.
struct Geometry {
  MetricField metric;
  CField conn;
  bool cosmological = false;
  int cosmo_k = 0;  // spatial curvature tag, meaningful when cosmological
};

}  // namespace mag
