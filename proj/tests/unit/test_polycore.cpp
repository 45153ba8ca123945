#include <doctest.h>

#include "oracles.hpp"
#include "slemmakit/polynomial.hpp"
#include "slemmakit/upoly.hpp"

using namespace slemmakit;

namespace {

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }
Rational Q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_SUITE("polycore") {

TEST_CASE("parse produces the expected term map") {
  Polynomial p = P("x1^2 - x2^2", 2);
  CHECK(p.size() == 2);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({0, 2}) == -1);

  Polynomial g = P("x1*x3 + x2*x3 + x1*x2", 3);
  CHECK(g.size() == 3);
  CHECK(g.coefficient({1, 0, 1}) == 1);
  CHECK(g.coefficient({0, 1, 1}) == 1);
  CHECK(g.coefficient({1, 1, 0}) == 1);

  CHECK(P("3/2*x1 - 3/2*x1", 1).is_zero());
  CHECK(P("2x1 + 1/3", 1).coefficient({1}) == 2);
  CHECK(P(" - 4 / 6 * x2 ^ 3 ", 2).coefficient({0, 3}) == Q(-2, 3));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x1 +", 1), ParseError);
  CHECK_THROWS_AS(P("x3", 2), ParseError);
  CHECK_THROWS_AS(P("x1 x2", 2), ParseError);
  try {
    P("x1 + x9", 2);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("", 2), ParseError);
}

TEST_CASE("aliases parse in configured contexts") {
  Polynomial p = parse_polynomial("z2^2 + x1 + z2*x1^2", 2, {"x1", "z2"});
  CHECK(p == P("x2^2 + x1 + x2*x1^2", 2));
  CHECK(format(p, {"x1", "z2"}) == "x1^2*z2 + z2^2 + x1");
}

TEST_CASE("arithmetic identities") {
  CHECK(P("x1^2 - x2^2", 2) * P("x1^2 + x2^2", 2) == P("x1^4 - x2^4", 2));
  Polynomial f = P("x1^4 - x2^4", 2), g = P("x1^2 - x2^2", 2);
  CHECK(f - P("2*x2^2", 2) * g == pow(g, 2));
  CHECK((f * Polynomial(2)).is_zero());
  CHECK(f * Rational(0) == Polynomial(2));
}

TEST_CASE("evaluate") {
  Polynomial g = P("x1*x3 + x2*x3 + x1*x2", 3);
  CHECK(g.evaluate({1, 1, 1}) == 3);
  Polynomial f = P("x1^3*x3 + x1^3*x2 + x2^2*x3^2", 3);
  CHECK(f.evaluate({1, -1, 0}) == -1);
  Polynomial h = P("7/2 + x1*x2 - x2^3", 2);
  CHECK(h.evaluate({0, 0}) == h.constant_term());
}

TEST_CASE("substitute along the blow-up chart") {
  std::vector<std::string> names{"x1", "z2"};
  Polynomial x1z2 = parse_polynomial("x1*z2", 2, names);
  Polynomial f = P("x1^3 + x1^3*x2 + x2^2", 2);
  CHECK(substitute(f, {{1, x1z2}}) == parse_polynomial("z2^2*x1^2 + x1^3 + z2*x1^4", 2, names));
  Polynomial g = P("x1 + x2 + x1*x2", 2);
  CHECK(substitute(g, {{1, x1z2}}) == parse_polynomial("x1 + z2*x1 + z2*x1^2", 2, names));
  CHECK(substitute(f, {}) == f);
  CHECK(substitute(f, {{0, Polynomial::variable(2, 0)}, {1, Polynomial::variable(2, 1)}}) == f);
}

TEST_CASE("homogenize and dehomogenize") {
  Polynomial ft = P("x1^3 + x1^3*x2 + x2^2", 2);
  CHECK(homogenize(ft) == P("x1^3*x3 + x1^3*x2 + x2^2*x3^2", 3));
  Polynomial one = Polynomial::constant(1, 1);
  CHECK(homogenize(one) == Polynomial::constant(2, 1));
  Polynomial gt = P("x1 + x2 + x1*x2", 2);
  Polynomial gh = homogenize(gt);
  CHECK(gh == P("x1*x3 + x2*x3 + x1*x2", 3));
  CHECK(dehomogenize(gh, 2) == gt);
  CHECK(gh.is_homogeneous());
  CHECK_THROWS(homogenize(Polynomial(2)));
}

TEST_CASE("leading forms") {
  CHECK(leading_form_z(P("x2^3 + x2^3*x1 + x1^2", 2), Grading{{3, 1}}) == P("x2^3*x1 + x1^2", 2));
  Polynomial h = P("x1^2 - 3*x1*x2 + x2^2", 2);
  CHECK(leading_form_z(h, Grading{{1, 1}}) == h);
  CHECK(leading_form_z(P("x1 + x2 + x1*x2", 2), Grading{{1, 1}}) == P("x1*x2", 2));

  auto [e, c] = leading_term_lex(P("x1 + x2 + x1*x2", 2));
  CHECK(e == Exponent{1, 1});
  CHECK(c == 1);
  CHECK(leading_term_lex(P("x1^3 + x1^3*x2 + x2^2", 2)).first == Exponent{3, 1});
  CHECK(leading_term_lex(P("-2*x2^5", 2)).second == -2);
  CHECK_THROWS(leading_form_z(Polynomial(2), Grading{{1, 1}}));
}

TEST_CASE("gradient") {
  auto g = gradient(P("x1^3 + x1^3*x2 + x2^2", 2));
  CHECK(g[0] == P("3*x1^2 + 3*x1^2*x2", 2));
  CHECK(g[1] == P("x1^3 + 2*x2", 2));
  for (const auto& d : gradient(Polynomial::constant(3, 5))) CHECK(d.is_zero());
  Polynomial f = P("x1^3*x3 + x1^3*x2 + x2^2*x3^2", 3);
  std::map<std::size_t, Polynomial> x3zero{{2, Polynomial(3)}};
  auto gf = gradient(f);
  CHECK(substitute(gf[0], x3zero) == P("3*x1^2*x2", 3));
  CHECK(substitute(gf[1], x3zero) == P("x1^3", 3));
  CHECK(substitute(gf[2], x3zero) == P("x1^3", 3));
}

TEST_CASE("compose_ray on the quintic pair") {
  Polynomial g = P("x1 + x2 + x1*x2^3", 2);
  // weights chosen distinct so that each monomial keeps its own power
  Polynomial r = compose_ray(g, {5, 5}, Grading{{2, 3}});
  CHECK(r == parse_polynomial("5*l^2 + 5*l^3 + 625*l^11", 1, {"l"}));
  CHECK(compose_ray(g, {5, 5}, Grading{{0, 0}}) == Polynomial::constant(1, g.evaluate({5, 5})));

  Polynomial f = P("x1^5 + x1^5*x2 + x2^2", 2);
  Polynomial s = compose_ray(f, {5, -5}, Grading{{1, 4}});
  // 3125 l^5 + 25 l^8 - 15625 l^9
  CHECK(s == parse_polynomial("3125*l^5 + 25*l^8 - 15625*l^9", 1, {"l"}));
  CHECK_THROWS(compose_ray(f, {1, 1}, Grading{{1, -1}}));

  UniRational u = compose_ray_laurent(P("x1 + x2", 2), {1, 1}, Grading{{1, -1}});
  CHECK(u.numerator == parse_polynomial("l^2 + 1", 1, {"l"}));
  CHECK(u.denominator == parse_polynomial("l", 1, {"l"}));
  CHECK(u.degree() == 1);
}

TEST_CASE("degree sentinel") {
  CHECK(Polynomial(2).degree().is_neg_inf());
  CHECK(Polynomial(2).degree() < Degree(0));
  CHECK(P("x1^2*x2 + 1", 2).degree().value() == 3);
}

TEST_CASE("exact division") {
  Polynomial q;
  CHECK(divides(P("x1 - x2", 2), P("x1^3 - x2^3", 2), &q));
  CHECK(q == P("x1^2 + x1*x2 + x2^2", 2));
  CHECK_FALSE(divides(P("x1*x2^3", 2), P("x1^5*x2", 2)));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    auto a = oracle::random_poly(rng, 3, 3, 4), b = oracle::random_poly(rng, 3, 3, 4),
         c = oracle::random_poly(rng, 3, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    auto x = oracle::random_point(rng, 3);
    CHECK((a * b).evaluate(x) == oracle::naive_eval(a, x) * oracle::naive_eval(b, x));
  }
}

TEST_CASE("leading forms are multiplicative") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 100; ++it) {
    auto a = oracle::random_poly(rng, 3, 4, 4), b = oracle::random_poly(rng, 3, 4, 4);
    if (a.is_zero() || b.is_zero()) continue;
    Grading z{{long(rng() % 4), long(rng() % 4), long(rng() % 4)}};
    CHECK(leading_form_z(a * b, z) == leading_form_z(a, z) * leading_form_z(b, z));
  }
}

TEST_CASE("compose_ray degree bound") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    auto p = oracle::random_poly(rng, 2, 5, 5);
    if (p.is_zero()) continue;
    Grading z{{long(rng() % 4), long(rng() % 4)}};
    auto x = oracle::random_point(rng, 2);
    Polynomial r = compose_ray(p, x, z);
    long w = z_degree(p, z);
    if (!r.is_zero()) CHECK(r.degree().value() <= w);
    if (oracle::naive_eval(leading_form_z(p, z), x) != 0) CHECK(r.degree().value() == w);
  }
}

TEST_CASE("homogenize round trips") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    auto p = oracle::random_poly(rng, 3, 4, 5);
    if (p.is_zero()) continue;
    Polynomial h = homogenize(p);
    CHECK(h.is_homogeneous());
    CHECK(dehomogenize(h, 3) == p);
    auto x = oracle::random_point(rng, 3);
    auto y = x;
    y.push_back(1);
    CHECK(h.evaluate(y) == oracle::naive_eval(p, x));
  }
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 100; ++it) {
    auto p = oracle::random_poly(rng, 4, 5, 6);
    CHECK(parse_polynomial(format(p), 4) == p);
  }
  CHECK(format(P("x1*x3 + x2*x3 + x1*x2", 3)) == "x1*x2 + x1*x3 + x2*x3");
  CHECK(format(P("-x1^4 + 3/2 - x2^4", 2)) == "-x1^4 - x2^4 + 3/2");
}

TEST_CASE("univariate helpers") {
  UPoly p = to_upoly(parse_polynomial("x1^4 - 2*x1^2 + 1", 1));
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.factors.size() == 1);
  CHECK(sf.factors[0].multiplicity == 2);
  CHECK(sf.factors[0].factor == to_upoly(parse_polynomial("x1^2 - 1", 1)));
  SturmSequence s(squarefree_part(p));
  CHECK(s.count_all() == 2);
  CHECK(s.count(Q(0), Q(2)) == 1);
  CHECK(gcd(p, p.derivative()) == to_upoly(parse_polynomial("x1^2 - 1", 1)));
}

}
