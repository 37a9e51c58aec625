#include <doctest.h>

#include "algtheta/error.hpp"
#include "algtheta/theta.hpp"
#include "test_curves.hpp"

using namespace algtheta;

namespace {

struct Term {
  Rat c;
  Exponent e;
};

MultiPoly build(const RingPtr& r, const std::vector<Term>& terms) {
  MultiPoly p(r);
  for (const auto& t : terms) p.add_term(t.e, t.c);
  return p;
}

struct Pipeline {
  CurveSpec curve;
  std::vector<SingularityData> sing;
  TauPolynomial tau;
};

Pipeline run(const CurveSpec& c) {
  auto sing = singularity_analysis(c);
  auto t = tau(build_frame(c, sing));
  return {c, sing, t};
}

MultiPoly theta_456(const RingPtr& r) {
  return build(r, {{1, {7, 0, 0, 0}}, {21, {4, 0, 1, 0}}, {-84, {3, 2, 0, 0}}, {252, {1, 0, 2, 0}}, {252, {0, 2, 1, 0}}, {-252, {0, 0, 0, 1}}});
}

MultiPoly theta_2_9(const RingPtr& r) {
  return build(r, {{1, {0, 0, 0, 10}},
                   {-45, {0, 0, 1, 7}},
                   {-15, {0, 0, 0, 7}},
                   {315, {0, 1, 0, 5}},
                   {-4725, {0, 0, 3, 1}},
                   {4725, {0, 1, 1, 2}},
                   {-1575, {1, 0, 0, 3}},
                   {make_rat(-175, 4), {0, 0, 0, 4}},
                   {-4725, {0, 0, 2, 1}},
                   {1575, {0, 1, 0, 2}},
                   {-4725, {0, 2, 0, 0}},
                   {4725, {1, 0, 1, 0}},
                   {-1050, {0, 0, 1, 1}},
                   {1575, {1, 0, 0, 0}}});
}

MultiPoly theta_two_singularities(const RingPtr& r) {
  return build(r, {{1, {5, 0, 0, 1}},   {-5, {4, 0, 0, 1}},  {10, {3, 0, 0, 1}},  {-20, {1, 2, 0, 1}}, {-10, {2, 0, 0, 1}},
                   {20, {1, 1, 0, 1}},  {20, {0, 2, 0, 1}},  {-20, {0, 1, 0, 1}}, {20, {0, 0, 1, 1}},  {3, {5, 0, 0, 0}},
                   {-10, {4, 0, 0, 0}}, {10, {3, 0, 0, 0}},  {-60, {1, 2, 0, 0}}, {20, {1, 1, 0, 0}},  {40, {0, 2, 0, 0}},
                   {60, {0, 0, 1, 0}}});
}

}  // namespace

TEST_CASE("theta from tau for <4,5,6>") {
  const Pipeline p = run(monomial_curve(NumericalSemigroup::from_generators({4, 5, 6})));
  const ThetaPolynomial th = theta_from_tau(p.tau, p.curve, p.sing);
  CHECK(th.polynomial == theta_456(th.polynomial.ring()));
  CHECK(th.tau_scalar == make_rat(1, 252));
  CHECK(th.provenance == Provenance::FromTau);
  CHECK(th.polynomial.is_weighted_homogeneous());
  CHECK(th.polynomial.weighted_degree() == 7);
  const RelationReport r = relation_check(p.curve, p.sing, p.tau, th);
  CHECK(r.ok);
  CHECK(r.exact);
  CHECK(r.scalar == make_rat(1, 252));
  const DegreeReport d = degree_report(th, p.sing);
  CHECK(d.total_degree == 7);
  CHECK(d.bound == 10);
  CHECK_FALSE(d.bound_attained);
  CHECK(d.leading_monomial_text == "z1^7");
}

TEST_CASE("theta from tau for the deformed <2,9> curve") {
  const Pipeline p = run(testcurves::semigroup_2_9());
  const ThetaPolynomial th = theta_from_tau(p.tau, p.curve, p.sing);
  CHECK(th.polynomial == theta_2_9(th.polynomial.ring()));
  CHECK(th.tau_scalar == make_rat(1, 4725));
  CHECK(th.variables[0].gap == 7);
  CHECK(th.variables[3].gap == 1);
  const RelationReport r = relation_check(p.curve, p.sing, p.tau, th);
  CHECK(r.ok);
  CHECK(r.scalar == make_rat(1, 4725));
  const DegreeReport d = degree_report(th, p.sing);
  CHECK(d.total_degree == 10);
  CHECK(d.bound_attained);
  CHECK(d.leading_monomial_text == "z4^10");
  CHECK(d.leading_unique);
}

TEST_CASE("theta from tau in genus one and error cases") {
  const Pipeline p = run(monomial_curve(NumericalSemigroup::from_generators({2, 3})));
  CHECK(theta_from_tau(p.tau, p.curve, p.sing).polynomial.to_string() == "z1");

  Pipeline bad = run(monomial_curve(NumericalSemigroup::from_generators({4, 5, 6})));
  bad.curve.differentials[3] = testcurves::poly({0, 1, 0, 0, 0, 0, 1});
  CHECK_THROWS_WITH_AS(theta_from_tau(bad.tau, bad.curve, bad.sing), doctest::Contains("normal form"), Error);

  const Pipeline two = run(testcurves::two_singularities());
  CHECK_THROWS_WITH_AS(theta_from_tau(two.tau, two.curve, two.sing), "multi-singularity curves use implicitization", Error);
}

TEST_CASE("implicitization agrees with tau for single singularities") {
  std::vector<CurveSpec> curves = {testcurves::semigroup_2_9()};
  for (const auto& s : enumerate_gorenstein(3)) curves.push_back(monomial_curve(s));
  for (const auto& c : curves) {
    CAPTURE(c.name);
    const Pipeline p = run(c);
    const ThetaPolynomial a = theta_from_tau(p.tau, p.curve, p.sing);
    ImplicitizationStats stats;
    const ThetaPolynomial b = theta_by_implicitization(p.curve, p.sing, {5}, &stats);
    CHECK(b.provenance == Provenance::Implicitized);
    CHECK(a.polynomial == b.polynomial);
    CHECK(stats.fit_samples == 2 * stats.monomials);
    CHECK(stats.fresh_samples == 2 * stats.fit_samples);
  }
}

TEST_CASE("implicitization for two singular points") {
  const Pipeline p = run(testcurves::two_singularities());
  const ThetaPolynomial th = theta_by_implicitization(p.curve, p.sing, {7});
  CHECK(th.polynomial == theta_two_singularities(th.polynomial.ring()));
  const DegreeReport d = degree_report(th, p.sing);
  CHECK(d.group_degrees == std::vector<int>{5, 1});
  CHECK(d.total_degree == 6);
  CHECK(d.leading_monomial_text == "z1^5*z4");
  CHECK(d.matches_lambda);
  const RelationReport r = relation_check(p.curve, p.sing, p.tau, th, 10);
  CHECK(r.ok);
  CHECK(r.scalar == make_rat(1, 20));
  REQUIRE(r.exponents.size() == 1);
  CHECK(r.exponents[0] == std::pair<Rat, int>{Rat(1), 1});
  CHECK(r.order == 10);
  CHECK_THROWS_AS(relation_check(p.curve, p.sing, p.tau, th, 13), Error);

  // theta vanishes on Abel sums computed independently from the antiderivatives
  const AbelData a = abel_data(p.curve, 1);
  for (const auto& [u1, u2, u3] : std::vector<std::tuple<int, int, int>>{{2, 4, -5}, {7, -1, 4}, {-3, 5, 11}}) {
    std::vector<Rat> z(4, Rat(0));
    for (int u : {u1, u2, u3})
      for (int j = 0; j < 4; ++j) z[j] += a.antiderivatives[j](make_rat(u, 3));
    CHECK(th.polynomial.evaluate(z) == 0);
  }

  ThetaPolynomial wrong = th;
  wrong.polynomial.add_term({0, 0, 1, 0}, 1);
  const RelationReport rw = relation_check(p.curve, p.sing, p.tau, wrong, 10);
  CHECK_FALSE(rw.ok);
  CHECK(rw.first_bad_weight >= 0);
}

TEST_CASE("implicitization degree control") {
  const Pipeline p = run(monomial_curve(NumericalSemigroup::from_generators({4, 5, 6})));
  ImplicitizationOptions low{3};
  low.degree = 6;
  CHECK_THROWS_WITH_AS(theta_by_implicitization(p.curve, p.sing, low), doctest::Contains("degree bound violated"), Error);
  ImplicitizationOptions high{3};
  high.degree = 8;
  high.mode = SupportMode::TotalDegree;
  CHECK_THROWS_WITH_AS(theta_by_implicitization(p.curve, p.sing, high), doctest::Contains("underdetermined"), Error);
  ImplicitizationOptions discover{3};
  discover.discover_degree = true;
  ImplicitizationStats stats;
  const ThetaPolynomial d = theta_by_implicitization(p.curve, p.sing, discover, &stats);
  CHECK(stats.degree == 7);
  CHECK(d.polynomial == theta_456(d.polynomial.ring()));
}

TEST_CASE("implicitization is reproducible and seed independent") {
  const Pipeline p = run(monomial_curve(NumericalSemigroup::from_generators({3, 4})));
  const auto a = theta_by_implicitization(p.curve, p.sing, {1}).polynomial;
  const auto b = theta_by_implicitization(p.curve, p.sing, {1}).polynomial;
  const auto c = theta_by_implicitization(p.curve, p.sing, {99}).polynomial;
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("relation check for the genus one cusp") {
  const Pipeline p = run(monomial_curve(NumericalSemigroup::from_generators({2, 3})));
  const ThetaPolynomial th = theta_by_implicitization(p.curve, p.sing, {1});
  const RelationReport r = relation_check(p.curve, p.sing, p.tau, th);
  CHECK(r.ok);
  CHECK(r.scalar == 1);
  CHECK(r.exponents.empty());
}
