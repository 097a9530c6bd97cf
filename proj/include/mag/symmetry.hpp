#pragma once

// Lie derivatives of metric and connection along vector fields, the rotation
// and cosmological generator catalogue, sampled symmetry verdicts, and the
// finite equatorial reflection.

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mag/component_array.hpp"
#include "mag/expr.hpp"
#include "mag/geometry.hpp"
#include "mag/jet4.hpp"
#include "mag/point.hpp"
#include "mag/tensors.hpp"

namespace mag {

enum class Generator { Xx, Xy, Xz, X1, X2, X3 };

inline const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Xx: return "X_x";
    case Generator::Xy: return "X_y";
    case Generator::Xz: return "X_z";
    case Generator::X1: return "X_1";
    case Generator::X2: return "X_2";
    default: return "X_3";
  }
}

// A vector field with exact derivatives (catalogue) or a user-supplied one
// whose derivatives are taken by central differences.
class VectorFieldSpec {
 public:
  static VectorFieldSpec catalogue(Generator g, int k = 0) {
    VectorFieldSpec v;
    v.analytic_ = true;
    v.gen_ = g;
    v.k_ = k;
    return v;
  }

  // Escape hatch: four parsed expressions in t, r, theta, phi.
  static VectorFieldSpec custom(std::array<Expr, 4> components) {
    VectorFieldSpec v;
    v.analytic_ = false;
    v.custom_ = std::move(components);
    return v;
  }

  bool analytic() const { return analytic_; }
  Generator generator() const { return gen_; }

  // X^mu with exact (catalogue) or finite-difference (custom) partials.
  std::array<Jet4, 4> components(const Point& p) const {
    if (analytic_) return catalogue_components(p);
    return fd_components(p);
  }

  std::array<double, 4> values(const Point& p) const {
    if (analytic_) {
      const auto c = catalogue_components(p);
      return {c[0].v, c[1].v, c[2].v, c[3].v};
    }
    std::array<double, 4> out;
    for (int mu = 0; mu < 4; ++mu)
      out[mu] = custom_[mu].eval_value(p.t, p.r, p.theta, p.phi);
    return out;
  }

 private:
  bool analytic_ = true;
  Generator gen_ = Generator::Xz;
  int k_ = 0;
  std::array<Expr, 4> custom_{};

  std::array<Jet4, 4> catalogue_components(const Point& p) const {
    const Jet4 r = Jet4::var(kR, p.r);
    const Jet4 th = Jet4::var(kTheta, p.theta);
    const Jet4 ph = Jet4::var(kPhi, p.phi);
    const Jet4 sth = sin(th), cth = cos(th);
    const Jet4 sph = sin(ph), cph = cos(ph);
    std::array<Jet4, 4> X{};
    switch (gen_) {
      case Generator::Xx:
        X[kTheta] = sph;
        X[kPhi] = cph * cth / sth;
        break;
      case Generator::Xy:
        X[kTheta] = -cph;
        X[kPhi] = sph * cth / sth;
        break;
      case Generator::Xz:
        X[kPhi] = Jet4(-1.0);
        break;
      case Generator::X1: {
        const Jet4 chi = sqrt(Jet4(1.0) - static_cast<double>(k_) * r * r);
        X[kR] = chi * sth * cph;
        X[kTheta] = chi / r * cth * cph;
        X[kPhi] = -(chi * sph) / (r * sth);
        break;
      }
      case Generator::X2: {
        const Jet4 chi = sqrt(Jet4(1.0) - static_cast<double>(k_) * r * r);
        X[kR] = chi * sth * sph;
        X[kTheta] = chi / r * cth * sph;
        X[kPhi] = (chi * cph) / (r * sth);
        break;
      }
      case Generator::X3: {
        const Jet4 chi = sqrt(Jet4(1.0) - static_cast<double>(k_) * r * r);
        X[kR] = chi * cth;
        X[kTheta] = -(chi / r) * sth;
        break;
      }
    }
    return X;
  }

  std::array<Jet4, 4> fd_components(const Point& p, double h = kFdStep) const {
    std::array<Jet4, 4> X{};
    for (int mu = 0; mu < 4; ++mu) {
      const Expr& e = custom_[mu];
      auto f = [&](const Point& q) {
        return e.eval_value(q.t, q.r, q.theta, q.phi);
      };
      Jet4 j(f(p));
      for (int a = 0; a < 4; ++a) {
        const double fp = f(p.shifted(a, h)), fm = f(p.shifted(a, -h));
        j.d[a] = (fp - fm) / (2.0 * h);
        j.dd[a][a] = (fp - 2.0 * j.v + fm) / (h * h);
      }
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          const double fpp = f(p.shifted(a, h).shifted(b, h));
          const double fpm = f(p.shifted(a, h).shifted(b, -h));
          const double fmp = f(p.shifted(a, -h).shifted(b, h));
          const double fmm = f(p.shifted(a, -h).shifted(b, -h));
          j.dd[a][b] = j.dd[b][a] = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
        }
      X[mu] = j;
    }
    return X;
  }
};

// ---------------------------------------------------------------------------
// Lie derivatives
// ---------------------------------------------------------------------------

inline ComponentArray lie_metric(const MetricEvaluator& g, const VectorFieldSpec& X,
                                 const Point& p, double h = kFdStep) {
  p.require_valid();
  const auto Xj = X.components(p);
  const ComponentArray gp = g(p);
  ComponentArray dg[4];
  for (int mu = 0; mu < 4; ++mu) {
    const ComponentArray plus = g(p.shifted(mu, h));
    const ComponentArray minus = g(p.shifted(mu, -h));
    ComponentArray d({Variance::Down, Variance::Down});
    for (int i = 0; i < d.size(); ++i)
      d.at_flat(i) = (plus.at_flat(i) - minus.at_flat(i)) / (2.0 * h);
    dg[mu] = d;
  }
  ComponentArray out({Variance::Down, Variance::Down});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double v = 0;
      for (int rho = 0; rho < 4; ++rho)
        v += Xj[rho].v * dg[rho](mu, nu) + Xj[rho].d[mu] * gp(rho, nu) +
             Xj[rho].d[nu] * gp(mu, rho);
      out(mu, nu) = v;
    }
  return out;
}

inline ComponentArray lie_connection(const ConnEvaluator& conn,
                                     const VectorFieldSpec& X, const Point& p,
                                     double h = kFdStep) {
  p.require_valid();
  const auto Xj = X.components(p);
  const ComponentArray G = conn(p);
  ComponentArray dG[4];
  for (int mu = 0; mu < 4; ++mu) {
    const ComponentArray plus = conn(p.shifted(mu, h));
    const ComponentArray minus = conn(p.shifted(mu, -h));
    ComponentArray d({Variance::Up, Variance::Down, Variance::Down});
    for (int i = 0; i < d.size(); ++i)
      d.at_flat(i) = (plus.at_flat(i) - minus.at_flat(i)) / (2.0 * h);
    dG[mu] = d;
  }
  ComponentArray out({Variance::Up, Variance::Down, Variance::Down});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        double v = Xj[mu].dd[nu][rho];
        for (int s = 0; s < 4; ++s)
          v += Xj[s].v * dG[s](mu, nu, rho) - Xj[mu].d[s] * G(s, nu, rho) +
               Xj[s].d[nu] * G(mu, s, rho) + Xj[s].d[rho] * G(mu, nu, s);
        out(mu, nu, rho) = v;
      }
  return out;
}

// Finite-difference Lie bracket [X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu.
inline std::array<double, 4> lie_bracket(const VectorFieldSpec& X,
                                         const VectorFieldSpec& Y, const Point& p,
                                         double h = kFdStep) {
  std::array<double, 4> out{};
  const auto xv = X.values(p);
  const auto yv = Y.values(p);
  for (int nu = 0; nu < 4; ++nu) {
    const auto yp = Y.values(p.shifted(nu, h)), ym = Y.values(p.shifted(nu, -h));
    const auto xp = X.values(p.shifted(nu, h)), xm = X.values(p.shifted(nu, -h));
    for (int mu = 0; mu < 4; ++mu)
      out[mu] += xv[nu] * (yp[mu] - ym[mu]) / (2.0 * h) -
                 yv[nu] * (xp[mu] - xm[mu]) / (2.0 * h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equatorial reflection
// ---------------------------------------------------------------------------

inline Point reflect_point(const Point& p) { return {p.t, p.r, M_PI - p.theta, p.phi}; }

// Pullback of a component-array field under theta -> pi - theta: re-evaluate
// at the reflected point and flip the sign once per theta index.
inline ComponentArray reflect_components(
    const std::function<ComponentArray(const Point&)>& field, const Point& p) {
  ComponentArray a = field(reflect_point(p));
  ComponentArray out = a;
  int idx[4];
  for (int i = 0; i < a.size(); ++i) {
    out.unflatten(i, idx);
    int nth = 0;
    for (int s = 0; s < a.rank(); ++s)
      if (idx[s] == kTheta) ++nth;
    out.at_flat(i) = (nth % 2 == 0) ? a.at_flat(i) : -a.at_flat(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetry verdicts
// ---------------------------------------------------------------------------

// Cosmo uses the six-generator set; CosmoO3 additionally demands the finite
// reflection, as O3 does for the three-generator set.
enum class SymmetryGroup { SO3, O3, Cosmo, CosmoO3 };

inline const char* group_name(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::SO3: return "SO3";
    case SymmetryGroup::O3: return "O3";
    case SymmetryGroup::Cosmo: return "COSMO";
    default: return "COSMO+O3";
  }
}

struct GeneratorResidual {
  std::string name;
  double metric_residual = 0.0;
  double connection_residual = 0.0;
};

struct SymmetryVerdict {
  SymmetryGroup group = SymmetryGroup::SO3;
  double tolerance = 1e-6;
  double max_metric_residual = 0.0;
  double max_connection_residual = 0.0;
  bool pass = false;
  std::vector<GeneratorResidual> breakdown;
  // O3 only: reflection residuals and the constraint functions C15..C20
  double reflection_metric_residual = 0.0;
  double reflection_connection_residual = 0.0;
  std::vector<std::string> violated_constraints;
};

struct SampleBox {
  double t_lo = 0.1, t_hi = 1.9;
  double r_lo = 1.0, r_hi = 3.0;
  double theta_lo = 0.2, theta_hi = M_PI - 0.2;
  double phi_lo = 0.0, phi_hi = 2.0 * M_PI;
};

// Deterministic low-discrepancy sample (Kronecker sequence with the R4
// constants), avoiding the coordinate axis.
inline std::vector<Point> quasi_random_points(int n, const SampleBox& box = {}) {
  // generalized golden-ratio constants for d = 4
  const double a1 = 0.856917024382657, a2 = 0.734292446979871,
               a3 = 0.629206271561404, a4 = 0.539159357238898;
  std::vector<Point> pts;
  pts.reserve(n);
  double x1 = 0.5, x2 = 0.5, x3 = 0.5, x4 = 0.5;
  for (int i = 0; i < n; ++i) {
    x1 = std::fmod(x1 + a1, 1.0);
    x2 = std::fmod(x2 + a2, 1.0);
    x3 = std::fmod(x3 + a3, 1.0);
    x4 = std::fmod(x4 + a4, 1.0);
    pts.push_back({box.t_lo + x1 * (box.t_hi - box.t_lo),
                   box.r_lo + x2 * (box.r_hi - box.r_lo),
                   box.theta_lo + x3 * (box.theta_hi - box.theta_lo),
                   box.phi_lo + x4 * (box.phi_hi - box.phi_lo)});
  }
  return pts;
}

inline SymmetryVerdict check_symmetry(const Geometry& geo, SymmetryGroup group,
                                      const std::vector<Point>& sample,
                                      double tol = 1e-6) {
  const MetricEvaluator ge = make_metric_evaluator(geo.metric);
  const ConnEvaluator ce = make_conn_evaluator(geo.conn);

  std::vector<VectorFieldSpec> gens = {VectorFieldSpec::catalogue(Generator::Xx),
                                       VectorFieldSpec::catalogue(Generator::Xy),
                                       VectorFieldSpec::catalogue(Generator::Xz)};
  if (group == SymmetryGroup::Cosmo || group == SymmetryGroup::CosmoO3) {
    gens.push_back(VectorFieldSpec::catalogue(Generator::X1, geo.cosmo_k));
    gens.push_back(VectorFieldSpec::catalogue(Generator::X2, geo.cosmo_k));
    gens.push_back(VectorFieldSpec::catalogue(Generator::X3, geo.cosmo_k));
  }

  // residuals are relative, normalized by 1 + max |component| over the sample
  double gscale = 1.0, cscale = 1.0;
  for (const Point& p : sample) {
    gscale = std::max(gscale, 1.0 + ge(p).max_abs());
    cscale = std::max(cscale, 1.0 + ce(p).max_abs());
  }

  SymmetryVerdict v;
  v.group = group;
  v.tolerance = tol;
  for (const auto& X : gens) {
    GeneratorResidual res;
    res.name = generator_name(X.generator());
    for (const Point& p : sample) {
      res.metric_residual =
          std::max(res.metric_residual, lie_metric(ge, X, p).max_abs() / gscale);
      res.connection_residual = std::max(res.connection_residual,
                                         lie_connection(ce, X, p).max_abs() / cscale);
    }
    v.max_metric_residual = std::max(v.max_metric_residual, res.metric_residual);
    v.max_connection_residual =
        std::max(v.max_connection_residual, res.connection_residual);
    v.breakdown.push_back(res);
  }

  bool reflection_ok = true;
  if (group == SymmetryGroup::O3 || group == SymmetryGroup::CosmoO3) {
    for (const Point& p : sample) {
      v.reflection_metric_residual =
          std::max(v.reflection_metric_residual,
                   (reflect_components(ge, p) - ge(p)).max_abs() / gscale);
      v.reflection_connection_residual =
          std::max(v.reflection_connection_residual,
                   (reflect_components(ce, p) - ce(p)).max_abs() / cscale);
    }
    reflection_ok = v.reflection_metric_residual < tol &&
                    v.reflection_connection_residual < tol;
    // name the violated parameter constraints
    static const char* names[6] = {"C15", "C16", "C17", "C18", "C19", "C20"};
    double worst[6] = {};
    for (const Point& p : sample) {
      const CJets cj = geo.conn(p.t, p.r);
      for (int i = 0; i < 6; ++i)
        worst[i] = std::max(worst[i], std::fabs(cj.c[15 + i].v) / cscale);
    }
    for (int i = 0; i < 6; ++i)
      if (worst[i] >= tol) v.violated_constraints.push_back(names[i]);
  }

  v.pass = v.max_metric_residual < tol && v.max_connection_residual < tol &&
           reflection_ok;
  return v;
}

}  // namespace mag
