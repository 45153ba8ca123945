#include <doctest.h>

#include "oracles.hpp"
#include "slemmakit/s4solve.hpp"

using namespace slemmakit;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s, 2); }
Polynomial X(const std::string& s) { return parse_polynomial(s, 1, {"x"}); }

void check_identity(const Polynomial& f, const Polynomial& g, const MultiplierCertificate& c) {
  CHECK(f - c.t * g - c.residual == Polynomial(f.nvars()));
  CHECK(c.t_evidence.is_proved());
  CHECK(c.residual_evidence.is_proved());
  CHECK(verify_multiplier(f, g, c));
  // independent grid look for negative values
  CHECK_FALSE(oracle::grid_finds_negative(c.t, 6, 4));
  CHECK_FALSE(oracle::grid_finds_negative(c.residual, 6, 4));
}

Polynomial random_linear(std::mt19937_64& rng) {
  return P("x1") * oracle::random_rational(rng, 3) + P("x2") * oracle::random_rational(rng, 3);
}

Polynomial random_binary_quadratic(std::mt19937_64& rng) {
  return P("x1^2") * oracle::random_rational(rng, 3) + P("x1*x2") * oracle::random_rational(rng, 3) +
         P("x2^2") * oracle::random_rational(rng, 3);
}

}  // namespace

TEST_SUITE("s4solve") {

TEST_CASE("univariate: double root goes through Case I") {
  Polynomial p = X("x^4 - 2*x^2 + 1"), q = X("1 - x^2");
  MultiplierCertificate c = univariate_s4(p, q, {0});
  CHECK(c.case_label.find("Case I") == 0);
  check_identity(p, q, c);

  Polynomial p2 = X("x^4 - 3*x^3 + 2*x^2"), q2 = X("x^2 - 4");  // x^2 (x-1)(x-2), S(q2) = |x| >= 2
  MultiplierCertificate c2 = univariate_s4(p2, q2, {3});
  CHECK(c2.case_label.find("Case I") == 0);
  check_identity(p2, q2, c2);
}

TEST_CASE("univariate: nonnegative p gives t = 0") {
  Polynomial p = X("x^4 + 1"), q = X("1 - x^2");
  MultiplierCertificate c = univariate_s4(p, q, {0});
  CHECK(c.t.is_zero());
  CHECK(c.residual == p);
}

TEST_CASE("univariate: four real roots, Case III") {
  Polynomial p = X("x^4 - 5*x^2 + 4");

  // the textbook choice q = 4 - x^2 has S(q) = [-2, 2], which contains points where p < 0
  CHECK_THROWS_AS(univariate_s4(p, X("4 - x^2"), {0}), S4Error);
  try {
    univariate_s4(p, X("4 - x^2"), {0});
  } catch (const S4Error& e) {
    CHECK(e.kind() == S4Error::Kind::InclusionFails);
  }

  Polynomial q = X("x^2 - 4");
  MultiplierCertificate c = univariate_s4(p, q, {3});
  CHECK(c.case_label.find("Case III") == 0);
  check_identity(p, q, c);
  CHECK(c.t == X("3"));
  CHECK(c.residual == X("x^4 - 8*x^2 + 16"));

  Polynomial inner = X("1 - x^2");
  MultiplierCertificate ci = univariate_s4(p, inner, {0});
  check_identity(p, inner, ci);

  // lc p < 0: bounded components [-2,-1] and [1,2]
  Polynomial pn = X("-x^4 + 5*x^2 - 4"), qn = X("1/16 - x^2 + 3*x - 9/4");
  MultiplierCertificate cn = univariate_s4(pn, qn, {Rational(3, 2)});
  check_identity(pn, qn, cn);
}

TEST_CASE("univariate: irrational roots are handled by approximation and exact checks") {
  // roots +-sqrt2, +-sqrt5
  Polynomial p = X("x^4 - 7*x^2 + 10"), q = X("x^2 - 6");
  MultiplierCertificate c = univariate_s4(p, q, {3});
  CHECK(c.case_label.find("Case III") == 0);
  check_identity(p, q, c);

  // Case II: real roots +-sqrt2 and a complex pair
  Polynomial p2 = X("x^4 - x^2 - 2"), q2 = X("x^2 - 3");
  MultiplierCertificate c2 = univariate_s4(p2, q2, {2});
  CHECK(c2.case_label.find("Case II") == 0);
  check_identity(p2, q2, c2);
}

TEST_CASE("univariate: precondition and Slater errors") {
  CHECK_THROWS_AS(univariate_s4(X("x^4 - 1"), X("-1 - x^2"), {0}), SlaterError);
  CHECK_THROWS_AS(univariate_s4(X("x^4 - 1"), X("x^3"), {1}), S4Error);
}

TEST_CASE("bivariate: x1^4 - x2^4 over x1^2 - x2^2") {
  Polynomial f = P("x1^4 - x2^4"), g = P("x1^2 - x2^2");
  MultiplierCertificate c = bivariate_s4(f, g, {1, 0});
  check_identity(f, g, c);

  // hand certificate t = 2 x2^2
  Polynomial hand = f - P("2*x2^2") * g;
  CHECK(hand == P("x1^4 - 2*x1^2*x2^2 + x2^4"));
  CHECK(hand == P("x1^2 - x2^2") * P("x1^2 - x2^2"));
}

TEST_CASE("bivariate: no fourth powers, Case I closed form") {
  Polynomial f = P("2*x1^2*x2^2 + x1*x2^3"), g = P("x1^2 - x2^2");
  MultiplierCertificate c = bivariate_s4(f, g, {1, 0});
  CHECK(c.case_label.find("Case I") == 0);
  check_identity(f, g, c);
  CHECK(c.t == P("x2^2"));
}

TEST_CASE("bivariate: f = g^2 needs no multiplier") {
  Polynomial g = P("x1^2 - 3*x1*x2 + x2^2");
  Polynomial f = g * g;
  MultiplierCertificate c = bivariate_s4(f, g, {1, 0});
  CHECK(c.t.is_zero());
  CHECK(c.residual == f);
}

TEST_CASE("bivariate: inclusion failure is reported") {
  try {
    bivariate_s4(P("x1^3*x2"), P("x1^2 - x2^2"), {1, 0});
    FAIL("expected an exception");
  } catch (const S4Error& e) {
    CHECK(e.kind() == S4Error::Kind::InclusionFails);
  }
}

TEST_CASE("bivariate: random planted instances") {
  std::mt19937_64 rng(404);
  int attempted = 0, solved = 0;
  while (attempted < 200) {
    Polynomial l1 = random_linear(rng), l2 = random_linear(rng);
    Polynomial g = l1 * l2 + random_binary_quadratic(rng) * Rational(1, 4);
    RationalVector slater;
    for (int a = -3; a <= 3 && slater.empty(); ++a)
      for (int b = -3; b <= 3 && slater.empty(); ++b)
        if (g.evaluate({a, b}) > 0) slater = {a, b};
    if (slater.empty()) continue;
    auto neg = negative_direction(gram_of(g));
    if (!neg) continue;  // want g indefinite
    Polynomial m1 = random_linear(rng), m2 = random_linear(rng);
    Polynomial t0 = m1 * m1 + m2 * m2 * Rational(1, 2);
    Polynomial s1 = random_binary_quadratic(rng), s2 = random_binary_quadratic(rng);
    Polynomial w0 = s1 * s1 + s2 * s2;
    Polynomial f = t0 * g + w0;
    if (f.is_zero()) continue;
    ++attempted;
    try {
      MultiplierCertificate c = bivariate_s4(f, g, slater);
      check_identity(f, g, c);
      ++solved;
    } catch (const S4Error& e) {
      CHECK(e.kind() == S4Error::Kind::PrecisionCeiling);
      MESSAGE("unsolved: f = " << format(f) << ", g = " << format(g) << ": " << e.what());
    }
  }
  CHECK(solved * 100 >= attempted * 95);
}

TEST_CASE("guard for g <= 0") {
  Polynomial f = P("x1^4 + x1^3*x2 + x1*x2^3");
  Verdict v = nonpositive_g_guard(f, P("-x1^2"));
  CHECK(v.is_disproved());
  bool obstruction = false;
  for (const auto& [k, val] : v.evidence) obstruction |= k == "obstruction";
  CHECK(obstruction);
  // f(s, 1) = s^4 + s^3 + s changes sign at s = 0 while -x1^2 is flat there
  CHECK(f.evaluate({Rational(-1, 10), 1}) < 0);
  CHECK(f.evaluate({Rational(1, 10), 1}) > 0);

  Verdict ok = nonpositive_g_guard(f, P("x1^2 - x2^2"));
  CHECK(ok.is_proved());
  REQUIRE(ok.witness);
  CHECK(P("x1^2 - x2^2").evaluate(*ok.witness) > 0);

  CHECK(nonpositive_g_guard(f, Polynomial(2)).is_disproved());
}

}  // TEST_SUITE
