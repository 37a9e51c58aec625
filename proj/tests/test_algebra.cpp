#include <doctest.h>

#include <random>

#include "algtheta/error.hpp"
#include "algtheta/linalg.hpp"
#include "algtheta/multipoly.hpp"
#include "algtheta/series.hpp"
#include "algtheta/upoly.hpp"

using namespace algtheta;

namespace {

MultiPoly random_poly(const RingPtr& r, std::mt19937_64& rng) {
  MultiPoly p(r);
  for (int t = 0; t < 4; ++t) {
    Exponent e(r->size());
    for (auto& k : e) k = static_cast<int>(rng() % 3);
    p.add_term(e, make_rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing rejects junk") {
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("a"), InputError);
  CHECK(to_string(parse_rat("-4/6")) == "-2/3");
  CHECK(to_string(parse_rat("12")) == "12");
}

TEST_CASE("weighted degree") {
  auto r = x_ring(2);
  CHECK(MultiPoly::variable(r, 0).weighted_degree() == 1);
  auto x1 = MultiPoly::variable(r, 0), x2 = MultiPoly::variable(r, 1);
  CHECK(x1.pow(7).weighted_degree() == 7);
  CHECK((x1.pow(3) * x2.pow(2)).weighted_degree() == 7);
  CHECK_THROWS_WITH(MultiPoly(r).weighted_degree(), "undefined degree");
}

TEST_CASE("substitution by name") {
  auto x = x_ring(1);
  auto u = make_plain_ring("u", 2);
  auto s = MultiPoly::variable(u, 0) + MultiPoly::variable(u, 1);
  auto p = substitute(MultiPoly::variable(x, 0).pow(2), {{"x1", s}}, u);
  CHECK(p.to_string() == "u1^2 + 2*u1*u2 + u2^2");
  CHECK_THROWS(substitute(MultiPoly::variable(x, 0), std::map<std::string, MultiPoly>{}, u));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  auto r = x_ring(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("weight-preserving substitution keeps the weighted degree") {
  std::mt19937_64 rng(5);
  auto r = x_ring(3);
  auto x1 = MultiPoly::variable(r, 0), x2 = MultiPoly::variable(r, 1), x3 = MultiPoly::variable(r, 2);
  std::vector<MultiPoly> images{x1 * Rat(2), x2 + x1.pow(2), x3 - x1 * x2 * Rat(3, 2)};
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_poly(r, rng);
    auto q = substitute(p, images);
    if (!q.is_zero()) CHECK(q.weighted_degree() == p.weighted_degree());
  }
}

TEST_CASE("serialization order") {
  auto r = make_ring({"z1", "z2"}, {1, 2});
  auto z1 = MultiPoly::variable(r, 0), z2 = MultiPoly::variable(r, 1);
  auto p = z1.pow(2) * Rat(-1, 2) + z2 * Rat(3) + MultiPoly::constant(r, 1);
  CHECK(p.to_string() == "-1/2*z1^2 + 3*z2 + 1");
}

TEST_CASE("exact division by a difference of variables") {
  auto u = make_plain_ring("u", 3);
  auto a = MultiPoly::variable(u, 0), b = MultiPoly::variable(u, 1), c = MultiPoly::variable(u, 2);
  auto q = a * a * c + b * Rat(5) - c.pow(3);
  CHECK(divide_by_difference((a - b) * q, 0, 1) == q);
  CHECK_THROWS(divide_by_difference(a, 0, 1));
}

TEST_CASE("series log") {
  Series one(std::vector<Rat>{1}, 4);
  CHECK(series_log(one) == Series(std::vector<Rat>{0}, 4));
  Series s(std::vector<Rat>{1, 1}, 3);
  CHECK(series_log(s) == Series(std::vector<Rat>{0, 1, Rat(-1, 2)}, 3));
  CHECK_THROWS_WITH(series_log(Series(std::vector<Rat>{0, 1}, 3)), "log of non-unit");
}

TEST_CASE("series exp and log are inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> c{0};
    for (int k = 1; k < 8; ++k) c.push_back(make_rat(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) + 1));
    Series s(c, 8);
    CHECK(series_log(series_exp(s)) == s);
    Series t = series_exp(s) * Rat(3);
    CHECK(series_exp(series_log(t)) * Rat(3) == t);
    CHECK(t * t.inverse() == Series(std::vector<Rat>{1}, 8));
  }
}

TEST_CASE("series over polynomial coefficients") {
  auto r = x_ring(1);
  auto x = MultiPoly::variable(r, 0);
  TruncSeries<MultiPoly> s(std::vector<MultiPoly>{MultiPoly::constant(r, 1), x}, 3);
  auto l = series_log(s);
  CHECK(l[1] == x);
  CHECK(l[2] == x * x * Rat(-1, 2));
}

TEST_CASE("partial fractions") {
  RationalFunction f(UPoly::constant(1), UPoly({0, -1, 1}));
  auto pf = partial_fractions(f);
  CHECK(pf.polynomial_part.is_zero());
  REQUIRE(pf.poles.size() == 2);
  CHECK(pf.poles[0] == PoleTerm{0, 1, -1});
  CHECK(pf.poles[1] == PoleTerm{1, 1, 1});
  CHECK(resum(pf) == f);

  auto poly = partial_fractions(RationalFunction(UPoly({1, 2, 3})));
  CHECK(poly.poles.empty());
  CHECK(poly.polynomial_part == UPoly({1, 2, 3}));

  RationalFunction g(UPoly::constant(1), UPoly({1, -1}).pow(2));
  auto pg = partial_fractions(g);
  REQUIRE(pg.poles.size() == 1);
  CHECK(pg.poles[0] == PoleTerm{1, 2, 1});
  CHECK(resum(pg) == g);

  CHECK_THROWS_WITH(partial_fractions(RationalFunction(UPoly::constant(1), UPoly({-2, 0, 1}))),
                    "denominator factor u^2 - 2 has no rational roots");
}

TEST_CASE("partial fractions round trip on random inputs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    UPoly den = UPoly::constant(1);
    for (int k = 0; k < 3; ++k) den = den * UPoly::linear_root(make_rat(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
    std::vector<Rat> num;
    for (int k = 0; k < 5; ++k) num.emplace_back(static_cast<long>(rng() % 9) - 4);
    RationalFunction f(UPoly(num), den);
    CHECK(resum(partial_fractions(f)) == f);
  }
}

TEST_CASE("rational roots and resultants") {
  UPoly p = UPoly::linear_root(Rat(2, 3)) * UPoly::linear_root(-5) * UPoly::linear_root(0) * UPoly({1, 0, 1});
  CHECK(rational_roots(p) == std::vector<Rat>{-5, 0, Rat(2, 3)});
  CHECK(rational_roots(p * p) == std::vector<Rat>{-5, 0, Rat(2, 3)});
  // res(f, g) = lc(f)^deg g * prod g(roots of f)
  CHECK(resultant(UPoly::linear_root(2), UPoly::linear_root(7)) == -5);
  CHECK(resultant(UPoly({-1, 0, 1}), UPoly::linear_root(1)) == 0);
  CHECK(resultant(UPoly({-2, 0, 1}), UPoly({1, 1})) == -1);
}

TEST_CASE("rational determinant and nullspace") {
  RatMatrix m{{Rat(1, 2), 2, 3}, {4, 5, 6}, {7, 8, Rat(10)}};
  // cofactor expansion by hand: 1/2(50-48) - 2(40-42) + 3(32-35) = 1 + 4 - 9
  CHECK(determinant(m) == -4);
  RatMatrix sing{{1, 2}, {2, 4}};
  CHECK(determinant(sing) == 0);
  auto k = nullspace(sing, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rat>{-2, 1});
}

TEST_CASE("modular kernels reconstruct rational vectors") {
  const auto p = modp::next_prime(1ull << 61);
  CHECK(p == 2305843009213693967ull);
  std::vector<std::vector<modp::u64>> rows{{modp::reduce(Rat(1, 3), p), modp::reduce(Rat(-2, 7), p)}};
  auto k = modp::nullspace(rows, 2, p);
  REQUIRE(k.size() == 1);
  auto r = rational_reconstruct(BigInt(std::to_string(k[0][0])), BigInt(std::to_string(p)));
  REQUIRE(r);
  CHECK(*r == Rat(6, 7));
}
