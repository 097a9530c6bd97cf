#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mag/symmetry.hpp"
#include "test_support.hpp"

using namespace mag;

namespace {

Geometry c_form_geometry(const MetricParams& m, const ConnParamsC& c) {
  Geometry g;
  g.metric = make_field(m);
  g.conn = make_field(c);
  return g;
}

}  // namespace

TEST_CASE("generator brackets reproduce so(3)") {
  using G = Generator;
  const auto Xx = VectorFieldSpec::catalogue(G::Xx);
  const auto Xy = VectorFieldSpec::catalogue(G::Xy);
  const auto Xz = VectorFieldSpec::catalogue(G::Xz);
  std::mt19937 rng(101);
  for (const auto& p : testsup::sample_points(rng, 6)) {
    const auto check = [&](const VectorFieldSpec& A, const VectorFieldSpec& B,
                           const VectorFieldSpec& C) {
      const auto br = lie_bracket(A, B, p);
      const auto cv = C.values(p);
      for (int mu = 0; mu < 4; ++mu) CHECK(std::fabs(br[mu] - cv[mu]) < 1e-8);
    };
    check(Xx, Xy, Xz);
    check(Xy, Xz, Xx);
    check(Xz, Xx, Xy);
  }
}

TEST_CASE("translation generators close into rotations") {
  // [X_1, X_2] = -k X_z for each curvature sign, by direct evaluation
  std::mt19937 rng(103);
  for (int k : {-1, 0, 1}) {
    const auto X1 = VectorFieldSpec::catalogue(Generator::X1, k);
    const auto X2 = VectorFieldSpec::catalogue(Generator::X2, k);
    const auto Xz = VectorFieldSpec::catalogue(Generator::Xz);
    for (auto p : testsup::sample_points(rng, 4)) {
      if (k == 1) p.r = 0.3 + 0.5 * (p.r - 1.0) / 2.0;  // keep k r^2 < 1
      const auto br = lie_bracket(X1, X2, p);
      const autoز = Xz.values(p);
      for (int mu = 0; mu < 4; ++mu)
        CHECK(std::fabs(br[mu] - (-k) * ز[mu]) < 1e-7);
    }
  }
}

TEST_CASE("lie_metric vanishes on the spherically symmetric family") {
  std::mt19937 rng(107);
  const MetricParams m = testsup::random_metric(rng);
  const MetricEvaluator ge = make_metric_evaluator(make_field(m));

  const Point p{0.0, 2.0, M_PI / 3, M_PI / 5};
  CHECK(lie_metric(ge, VectorFieldSpec::catalogue(Generator::Xz), p).max_abs() < 1e-8);
  CHECK(lie_metric(ge, VectorFieldSpec::catalogue(Generator::Xx), p).max_abs() < 1e-7);
  CHECK(lie_metric(ge, VectorFieldSpec::catalogue(Generator::Xy), p).max_abs() < 1e-7);

  // artificially break the symmetry: g_t-theta = 1
  const MetricEvaluator broken = [&](const Point& q) {
    ComponentArray g = ge(q);
    g(kT, kTheta) = g(kTheta, kT) = 1.0;
    return g;
  };
  CHECK(lie_metric(broken, VectorFieldSpec::catalogue(Generator::Xx), p).max_abs() > 0.1);
}

TEST_CASE("lie_connection vanishes on the C-form family") {
  std::mt19937 rng(109);
  const ConnParamsC c = testsup::random_cparams(rng);
  const ConnEvaluator ce = make_conn_evaluator(make_field(c));
  for (const auto& p : testsup::sample_points(rng, 5)) {
    const double scale = 1.0 + ce(p).max_abs();
    for (Generator g : {Generator::Xx, Generator::Xy, Generator::Xz}) {
      const auto L = lie_connection(ce, VectorFieldSpec::catalogue(g), p);
      CHECK(L.max_abs() / scale < 1e-6);
    }
  }
  // X_z just reads off -d_phi Gamma
  const Point p{0.3, 1.7, 1.0, 2.0};
  CHECK(lie_connection(ce, VectorFieldSpec::catalogue(Generator::Xz), p).max_abs() <
        1e-9);
}

TEST_CASE("custom vector fields reproduce a catalogue entry") {
  std::array<Expr, 4> comp = {Expr::parse_extended("0"), Expr::parse_extended("0"),
                              Expr::parse_extended("sin(phi)"),
                              Expr::parse_extended("cos(phi)*cos(theta)/sin(theta)")};
  const auto custom = VectorFieldSpec::custom(comp);
  const auto cat = VectorFieldSpec::catalogue(Generator::Xx);
  std::mt19937 rng(113);
  const ConnParamsC c = testsup::random_cparams(rng);
  const ConnEvaluator ce = make_conn_evaluator(make_field(c));
  for (const auto& p : testsup::sample_points(rng, 2)) {
    const auto a = custom.values(p);
    const auto b = cat.values(p);
    for (int mu = 0; mu < 4; ++mu) CHECK(a[mu] == Catch::Approx(b[mu]).margin(1e-14));
    // second derivatives come from double finite differences; looser bar
    const double scale = 1.0 + ce(p).max_abs();
    CHECK(lie_connection(ce, custom, p).max_abs() / scale < 1e-4);
  }
}

TEST_CASE("reflect_components: metric always invariant, C15 breaks the connection") {
  std::mt19937 rng(127);
  const MetricParams m = testsup::random_metric(rng);
  const MetricEvaluator ge = make_metric_evaluator(make_field(m));
  for (const auto& p : testsup::sample_points(rng, 4))
    CHECK((reflect_components(ge, p) - ge(p)).max_abs() < 1e-14);

  // the fixed trig skeleton is reflection-symmetric
  ConnParamsC zero;
  const ConnEvaluator skel = make_conn_evaluator(make_field(zero));
  for (const auto& p : testsup::sample_points(rng, 4))
    CHECK((reflect_components(skel, p) - skel(p)).max_abs() < 1e-14);

  // Gamma^theta_{t phi} = -C15 sin(theta) flips sign under reflection
  ConnParamsC c15;
  c15.c[15] = Expr::parse("1.5");
  const ConnEvaluator ce = make_conn_evaluator(make_field(c15));
  const Point p{0.0, 2.0, 1.0, 0.4};
  const ComponentArray refl = reflect_components(ce, p);
  const ComponentArray orig = ce(p);
  CHECK(refl(kTheta, kT, kPhi) == Catch::Approx(-orig(kTheta, kT, kPhi)));
  CHECK(orig(kTheta, kT, kPhi) == Catch::Approx(-1.5 * std::sin(p.theta)));
}

TEST_CASE("check_symmetry: SO3 passes for random C-form geometries") {
  std::mt19937 rng(131);
  const auto sample = quasi_random_points(8);
  for (int k = 0; k < 3; ++k) {
    const Geometry geo =
        c_form_geometry(testsup::random_metric(rng), testsup::random_cparams(rng));
    const SymmetryVerdict v = check_symmetry(geo, SymmetryGroup::SO3, sample);
    CHECK(v.pass);
    CHECK(v.breakdown.size() == 3);
  }
}

TEST_CASE("check_symmetry: O3 verdict tracks the C15..C20 constraints") {
  std::mt19937 rng(137);
  const auto sample = quasi_random_points(8);

  // reflection-symmetric: C15..C20 all zero
  ConnParamsC good = testsup::random_cparams(rng);
  for (int i = 15; i <= 20; ++i) good.c[i] = Expr();
  const MetricParams m = testsup::random_metric(rng);
  CHECK(check_symmetry(c_form_geometry(m, good), SymmetryGroup::O3, sample).pass);

  // each single constraint violation must fail and be named
  for (int i = 15; i <= 20; ++i) {
    ConnParamsC bad = good;
    bad.c[i] = Expr::parse("1");
    const SymmetryVerdict v =
        check_symmetry(c_form_geometry(m, bad), SymmetryGroup::O3, sample);
    CHECK_FALSE(v.pass);
    REQUIRE(v.violated_constraints.size() == 1);
    CHECK(v.violated_constraints[0] == std::string("C") + std::to_string(i));
  }

  // C17 on its own: the violation shows up in Gamma^phi_{theta t}
  ConnParamsC c17 = good;
  c17.c[17] = Expr::parse("1");
  const ConnEvaluator ce = make_conn_evaluator(make_field(c17));
  const Point p{0.5, 2.0, 1.1, 0.3};
  const ComponentArray diff = reflect_components(ce, p) - ce(p);
  CHECK(std::fabs(diff(kPhi, kTheta, kT)) > 0.1);
  // and nowhere else
  ComponentArray mask = diff;
  mask(kPhi, kTheta, kT) = 0.0;
  mask(kTheta, kPhi, kT) = 0.0;
  CHECK(mask.max_abs() < 1e-12);
}

TEST_CASE("check_symmetry: O3 on the TQ-form tracks T3,T4,T7,T8,Q11,Q12") {
  std::mt19937 rng(139);
  const auto sample = quasi_random_points(6);
  const MetricParams m = testsup::random_metric(rng);
  TQParams tq = testsup::random_tq(rng);
  tq.t[3] = tq.t[4] = tq.t[7] = tq.t[8] = Expr();
  tq.q[11] = tq.q[12] = Expr();
  Geometry geo;
  geo.metric = make_field(m);
  geo.conn = make_tq_field(m, tq);
  CHECK(check_symmetry(geo, SymmetryGroup::O3, sample).pass);

  TQParams bad = tq;
  bad.q[11] = Expr::parse("0.7");
  Geometry geob;
  geob.metric = make_field(m);
  geob.conn = make_tq_field(m, bad);
  CHECK_FALSE(check_symmetry(geob, SymmetryGroup::O3, sample).pass);
}

TEST_CASE("check_symmetry: S-form O3 iff S15..S20 vanish") {
  std::mt19937 rng(149);
  const auto sample = quasi_random_points(6);
  const MetricParams m = testsup::random_metric(rng);
  SpinParams s = testsup::random_spin(rng);
  for (int i = 15; i <= 20; ++i) s.s[i] = Expr();
  Geometry geo;
  geo.metric = make_field(m);
  geo.conn = make_spin_field(m, s);
  CHECK(check_symmetry(geo, SymmetryGroup::O3, sample).pass);

  SpinParams bad = s;
  bad.s[17] = Expr::parse("0.5");
  Geometry geob;
  geob.metric = make_field(m);
  geob.conn = make_spin_field(m, bad);
  CHECK_FALSE(check_symmetry(geob, SymmetryGroup::O3, sample).pass);
}
