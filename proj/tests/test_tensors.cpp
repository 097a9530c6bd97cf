#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mag/geometry.hpp"
#include "mag/tensors.hpp"
#include "test_support.hpp"

using namespace mag;

TEST_CASE("torsion: closed form, antisymmetry, definitional agreement") {
  ConnParamsC c;
  c.c[2] = Expr::parse("1");
  c.c[3] = Expr::parse("3");
  const Point p{0.0, 2.0, 1.0, 0.5};
  const ComponentArray T = torsion(eval_jets(c, p.t, p.r), p);
  CHECK(T(kT, kT, kR) == 2.0);
  CHECK(T(kT, kR, kT) == -2.0);

  std::mt19937 rng(51);
  for (int k = 0; k < 5; ++k) {
    const ConnParamsC cr = testsup::random_cparams(rng);
    for (const auto& q : testsup::sample_points(rng, 3)) {
      const CJets cj = eval_jets(cr, q.t, q.r);
      const ComponentArray closed = torsion(cj, q);
      const ComponentArray defin = torsion_definitional(connection_components(cj, q));
      CHECK((closed - defin).max_abs() < 1e-12);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int d = 0; d < 4; ++d) CHECK(closed(a, b, d) == -closed(a, d, b));
    }
  }

  // Levi-Civita connection is symmetric
  const MetricParams m = testsup::random_metric(rng);
  for (const auto& q : testsup::sample_points(rng, 3)) {
    const ComponentArray T0 = torsion(lc_cjets(eval_jets(m, q.t, q.r)), q);
    CHECK(T0.max_abs() < 1e-12);
  }
}

TEST_CASE("nonmetricity: parameter reads and nabla-g oracle") {
  std::mt19937 rng(53);
  const MetricParams m = testsup::random_metric(rng);

  // metric compatibility of Levi-Civita
  for (const auto& p : testsup::sample_points(rng, 3)) {
    const GJets gj = eval_jets(m, p.t, p.r);
    CHECK(nonmetricity(gj, lc_cjets(gj), p).max_abs() < 1e-10);
  }

  // TQ-form with a single nonmetricity parameter switched on
  TQParams tq;
  tq.q[4] = Expr::parse("7");
  const Point p{0.2, 1.5, 1.1, 0.7};
  const GJets gj = eval_jets(m, p.t, p.r);
  const ComponentArray Q =
      nonmetricity(gj, c_from_tq(gj, eval_jets(tq, p.t, p.r)), p);
  const double s2 = std::sin(p.theta) * std::sin(p.theta);
  CHECK(Q(kT, kTheta, kTheta) == Catch::Approx(7.0));
  CHECK(Q(kT, kPhi, kPhi) == Catch::Approx(7.0 * s2));

  // closed form vs finite-difference covariant derivative of the metric
  for (int k = 0; k < 4; ++k) {
    const MetricParams mr = testsup::random_metric(rng);
    const ConnParamsC cr = testsup::random_cparams(rng);
    const MetricEvaluator ge = make_metric_evaluator(make_field(mr));
    const ConnEvaluator ce = make_conn_evaluator(make_field(cr));
    for (const auto& q : testsup::sample_points(rng, 3)) {
      const ComponentArray closed =
          nonmetricity(eval_jets(mr, q.t, q.r), eval_jets(cr, q.t, q.r), q);
      const ComponentArray oracle = nonmetricity_definitional(ge, ce, q);
      const double scale = 1.0 + oracle.max_abs();
      CHECK((closed - oracle).max_abs() / scale < 1e-6);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int d = 0; d < 4; ++d) CHECK(closed(a, b, d) == closed(a, d, b));
    }
  }
}

TEST_CASE("contortion: closed form vs definition") {
  std::mt19937 rng(59);
  const Point p{0.0, 2.0, 1.2, 0.4};

  TQParams zero;
  const MetricParams mink = MetricParams::minkowski_spherical();
  CHECK(contortion(mink, zero, p).max_abs() == 0.0);

  TQParams t5;
  t5.t[5] = Expr::parse("1");
  const ComponentArray K = contortion(mink, t5, p);
  CHECK(K(kT, kTheta, kTheta) == Catch::Approx(4.0));  // e^{G4} T5 at r=2

  for (int k = 0; k < 4; ++k) {
    const MetricParams m = testsup::random_metric(rng);
    const TQParams tq = testsup::random_tq(rng);
    for (const auto& q : testsup::sample_points(rng, 3)) {
      const GJets gj = eval_jets(m, q.t, q.r);
      const TQJets tqj = eval_jets(tq, q.t, q.r);
      const ComponentArray closed = contortion(gj, tqj, q);
      const ComponentArray g = metric_components(metric_component_jets(gj), q);
      const ComponentArray Tud = torsion(c_from_tq(gj, tqj), q);
      const ComponentArray defin = contortion_definitional(g, Tud);
      CHECK((closed - defin).max_abs() < 1e-10);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int d = 0; d < 4; ++d) CHECK(closed(a, b, d) == -closed(b, a, d));
    }
  }
}

TEST_CASE("disformation: closed form vs definition") {
  std::mt19937 rng(61);
  const Point p{0.0, 2.0, 1.2, 0.4};
  const MetricParams mink = MetricParams::minkowski_spherical();

  TQParams zero;
  CHECK(disformation(mink, zero, p).max_abs() == 0.0);

  TQParams q1;
  q1.q[1] = Expr::parse("4");
  CHECK(disformation(mink, q1, p)(kT, kT, kT) == -2.0);

  for (int k = 0; k < 4; ++k) {
    const MetricParams m = testsup::random_metric(rng);
    const TQParams tq = testsup::random_tq(rng);
    for (const auto& q : testsup::sample_points(rng, 3)) {
      const TQJets tqj = eval_jets(tq, q.t, q.r);
      const ComponentArray closed = disformation_from_q(tqj, q);
      const ComponentArray defin =
          disformation_definitional(nonmetricity_from_q(tqj, q));
      CHECK((closed - defin).max_abs() < 1e-10);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int d = 0; d < 4; ++d) CHECK(closed(a, b, d) == closed(a, d, b));
    }
  }
}

TEST_CASE("Levi-Civita closed form vs jet Christoffel") {
  const MetricParams mink = MetricParams::minkowski_spherical();
  const Point p{0.0, 2.0, M_PI / 2, 0.0};
  CHECK(levi_civita_all_down(mink, p)(kR, kTheta, kTheta) == Catch::Approx(-2.0));

  // static metric: every t-derivative-driven component vanishes
  MetricParams stat;
  stat.g[1] = Expr::parse("sin(r)/4");
  stat.g[2] = Expr::parse("0.2*cos(r)");
  stat.g[3] = Expr::parse("0.3");
  stat.g[4] = Expr::parse("2*log(r)");
  const ComponentArray L0 = levi_civita_all_down(stat, p);
  CHECK(L0(kT, kT, kT) == 0.0);
  CHECK(L0(kTheta, kT, kTheta) == 0.0);
  CHECK(L0(kPhi, kT, kPhi) == 0.0);

  std::mt19937 rng(67);
  for (int k = 0; k < 4; ++k) {
    const MetricParams m = testsup::random_metric(rng);
    for (const auto& q : testsup::sample_points(rng, 3)) {
      const GJets gj = eval_jets(m, q.t, q.r);
      const ComponentArray closed = levi_civita_all_down(gj, q);
      const ComponentArray oracle = christoffel_all_down(metric_component_jets(gj), q);
      CHECK((closed - oracle).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("connection decomposition residual") {
  std::mt19937 rng(71);

  TQParams zero;
  const MetricParams mink = MetricParams::minkowski_spherical();
  for (const auto& p : testsup::sample_points(rng, 3))
    CHECK(decomposition_residual(mink, zero, p).max_abs() < 1e-12);

  // torsion only: disformation term drops out
  TQParams tonly = testsup::random_tq(rng);
  for (int i = 1; i <= 12; ++i) tonly.q[i] = Expr();
  const MetricParams m1 = testsup::random_metric(rng);
  for (const auto& p : testsup::sample_points(rng, 3)) {
    CHECK(disformation(m1, tonly, p).max_abs() == 0.0);
    CHECK(decomposition_residual(m1, tonly, p).max_abs() < 1e-10);
  }

  for (int k = 0; k < 6; ++k) {
    const MetricParams m = testsup::random_metric(rng);
    const TQParams tq = testsup::random_tq(rng);
    for (const auto& p : testsup::sample_points(rng, 10))
      CHECK(decomposition_residual(m, tq, p).max_abs() < 1e-9);
  }
}

TEST_CASE("curvature: C = 0 skeleton") {
  ConnParamsC zero;
  const Point p{0.0, 1.0, 1.1, 0.3};
  const ComponentArray R = curvature_explicit(zero, p);
  const double s2 = std::sin(p.theta) * std::sin(p.theta);
  CHECK(R(kTheta, kPhi, kTheta, kPhi) == Catch::Approx(s2));
  CHECK(R(kPhi, kTheta, kTheta, kPhi) == Catch::Approx(-1.0));
  CHECK(R(kTheta, kPhi, kPhi, kTheta) == Catch::Approx(-s2));
  CHECK(R(kPhi, kTheta, kPhi, kTheta) == Catch::Approx(1.0));
  int nonzero = 0;
  for (int i = 0; i < R.size(); ++i)
    if (R.at_flat(i) != 0.0) ++nonzero;
  CHECK(nonzero == 4);
}

TEST_CASE("curvature: explicit equals generic oracle") {
  std::mt19937 rng(73);
  for (int k = 0; k < 6; ++k) {
    const ConnParamsC c = testsup::random_cparams(rng);
    const ConnEvaluator ce = make_conn_evaluator(make_field(c));
    for (const auto& p : testsup::sample_points(rng, 3)) {
      const ComponentArray exact = curvature_explicit(eval_jets(c, p.t, p.r), p);
      const ComponentArray oracle = curvature_generic(ce, p);
      const double scale = 1.0 + exact.max_abs();
      CHECK((exact - oracle).max_abs() / scale < 1e-6);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              CHECK(exact(a, b, mu, nu) == -exact(a, b, nu, mu));
    }
  }
}

TEST_CASE("curvature of flat space via the generic path") {
  const MetricParams mink = MetricParams::minkowski_spherical();
  const ConnEvaluator lc = make_conn_evaluator(make_lc_field(mink));
  std::mt19937 rng(79);
  for (const auto& p : testsup::sample_points(rng, 4)) {
    CHECK(curvature_generic(lc, p).max_abs() < 1e-6);
    CHECK(curvature_explicit(lc_cjets(eval_jets(mink, p.t, p.r)), p).max_abs() < 1e-12);
  }
}

TEST_CASE("reflection constraints collapse the algebraic curvature block") {
  std::mt19937 rng(83);
  for (int k = 0; k < 4; ++k) {
    ConnParamsC c = testsup::random_cparams(rng);
    for (int i = 15; i <= 20; ++i) c.c[i] = Expr();
    for (const auto& p : testsup::sample_points(rng, 3)) {
      const CJets cj = eval_jets(c, p.t, p.r);
      const ComponentArray R = curvature_explicit(cj, p);
      // every (theta,phi)-pair component except the sphere line vanishes
      CHECK(R(kT, kT, kTheta, kPhi) == 0.0);
      CHECK(R(kT, kR, kTheta, kPhi) == 0.0);
      CHECK(R(kR, kT, kTheta, kPhi) == 0.0);
      CHECK(R(kR, kR, kTheta, kPhi) == 0.0);
      CHECK(R(kTheta, kTheta, kTheta, kPhi) == 0.0);
      CHECK(R(kPhi, kPhi, kTheta, kPhi) == 0.0);
      const double simplified = 1.0 + cj.c[9].v * cj.c[11].v + cj.c[10].v * cj.c[12].v;
      const double s2 = std::sin(p.theta) * std::sin(p.theta);
      CHECK(std::fabs(R(kTheta, kPhi, kTheta, kPhi) - simplified * s2) < 1e-12);
      CHECK(std::fabs(R(kPhi, kTheta, kTheta, kPhi) + simplified) < 1e-12);
    }
  }
}
