#include <doctest.h>

#include "oracles.hpp"
#include "slemmakit/slemma.hpp"

using namespace slemmakit;

namespace {

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }
Polynomial X(const std::string& s) { return parse_polynomial(s, 1, {"x"}); }

Polynomial random_form(std::mt19937_64& rng, std::size_t n, int range) {
  Polynomial p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Exponent e(n, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, oracle::random_rational(rng, range));
    }
  return p;
}

void check_certificate(const Polynomial& f, const Polynomial& g, const SlemmaResult& r) {
  REQUIRE(r.outcome == SlemmaOutcome::Certificate);
  const Rational& t = r.certificate->t;
  CHECK(t >= 0);
  CHECK(oracle::psd_by_principal_minors(oracle::gram_naive(homogenize_to(f - g * t, 2))));
  for (const auto& d : r.certificate->psd_evidence.diagonal) CHECK(d >= 0);
}

}  // namespace

TEST_SUITE("slemma") {

TEST_CASE("homogeneous example: feasible interval [1, 2]") {
  Polynomial f = P("2*x1^2 - x2^2", 2), g = P("x1^2 - x2^2", 2);
  SlemmaResult r = homogeneous_slemma(f, g, {1, 0});
  check_certificate(f, g, r);
  CHECK(r.certificate->t == Rational(3, 2));
  REQUIRE(r.feasible.lower);
  REQUIRE(r.feasible.upper);
  CHECK(r.feasible.lower->hi == 1);
  CHECK(r.feasible.upper->hi == 2);
  // grid oracle over 0..3 step 1/100
  auto grid = oracle::feasible_grid(f, g, 3, Rational(1, 100));
  REQUIRE_FALSE(grid.empty());
  CHECK(grid.front() == 1);
  CHECK(grid.back() == 2);
}

TEST_CASE("homogeneous trivial cases") {
  Polynomial g = P("x1^2 - x2^2", 2);
  SlemmaResult same = homogeneous_slemma(g, g, {1, 0});
  check_certificate(g, g, same);
  CHECK(same.certificate->t == 1);

  Polynomial f = P("x1^2 + x1*x2 + x2^2", 2);
  SlemmaResult psd = homogeneous_slemma(f, g, {1, 0});
  check_certificate(f, g, psd);
  CHECK(psd.certificate->t == 0);

  CHECK_THROWS_AS(homogeneous_slemma(f, g, {0, 1}), SlaterError);
}

TEST_CASE("homogeneous refutations carry valid witnesses") {
  Polynomial g = P("x1^2 - x2^2", 2);
  SlemmaResult a = homogeneous_slemma(P("-x1^2", 2), g, {1, 0});
  CHECK(a.outcome == SlemmaOutcome::Refutation);
  REQUIRE(a.witness);

  Polynomial f = P("x1*x2", 2);
  SlemmaResult b = homogeneous_slemma(f, g, {1, 0});
  CHECK(b.outcome == SlemmaOutcome::Refutation);
  CHECK(b.feasible.empty);
  REQUIRE(b.witness);
  CHECK(g.evaluate(*b.witness) >= 0);
  CHECK(f.evaluate(*b.witness) < 0);
}

TEST_CASE("single irrational feasible point is reported as boundary_only") {
  // blocks [[t,2],[2,2t]] and [[3/2-t,1/2],[1/2,3/2+t]] are jointly PSD only at t = sqrt 2
  Polynomial f = P("4*x1*x2 + 3/2*x3^2 + x3*x4 + 3/2*x4^2", 4);
  Polynomial g = P("-x1^2 - 2*x2^2 + x3^2 - x4^2", 4);
  SlemmaResult r = homogeneous_slemma(f, g, {0, 0, 1, 0});
  CHECK(r.outcome == SlemmaOutcome::BoundaryOnly);
  CHECK(r.feasible.boundary_only);
  REQUIRE(r.feasible.lower);
  const RealRoot& t = *r.feasible.lower;
  CHECK(t.lo * t.lo < 2);
  CHECK(t.hi * t.hi > 2);
  CHECK_FALSE(r.certificate);
}

TEST_CASE("affine examples") {
  SlemmaResult a = affine_slemma(X("x^2 - 2*x + 1"), X("1 - x^2"), {0});
  REQUIRE(a.outcome == SlemmaOutcome::Certificate);
  CHECK(a.certificate->t == 0);

  SlemmaResult b = affine_slemma(X("x"), X("x"), {1});
  REQUIRE(b.outcome == SlemmaOutcome::Certificate);
  CHECK(b.certificate->t == 1);

  Polynomial f = X("2 - x^2"), g = X("1 - x^2");
  SlemmaResult c = affine_slemma(f, g, {0});
  REQUIRE(c.outcome == SlemmaOutcome::Certificate);
  CHECK(verify_scalar_certificate(f, g, c.certificate->t));
  CHECK(verify_scalar_certificate(f, g, 1));
  CHECK(c.feasible.lower->hi == 1);
  CHECK(c.feasible.upper->hi == 2);
  // grid oracle on the homogenized pair
  auto grid = oracle::feasible_grid(homogenize_to(f, 2), homogenize_to(g, 2), 3, Rational(1, 100));
  CHECK(grid.front() == 1);
  CHECK(grid.back() == 2);
}

TEST_CASE("affine refutation maps back to an affine witness") {
  Polynomial f = P("x1 - 1", 2), g = P("1 - x1^2 - x2^2", 2);
  SlemmaResult r = affine_slemma(f, g, {0, 0});
  CHECK(r.outcome == SlemmaOutcome::Refutation);
  REQUIRE(r.witness);
  CHECK(g.evaluate(*r.witness) >= 0);
  CHECK(f.evaluate(*r.witness) < 0);
}

TEST_CASE("random pencils: certificates re-verify, feasible sets are intervals, refutations re-check") {
  std::mt19937_64 rng(101);
  int certs = 0, refs = 0;
  for (int it = 0; it < 80; ++it) {
    std::size_t n = 2 + rng() % 2;
    Polynomial g = random_form(rng, n, 3);
    RationalVector xs;
    for (int tries = 0; tries < 50; ++tries) {
      xs = oracle::random_point(rng, n, 2, 1);
      if (g.evaluate(xs) > 0) break;
    }
    if (g.evaluate(xs) <= 0) continue;
    Polynomial f = g * oracle::random_rational(rng, 3) + random_form(rng, n, 1);
    SlemmaResult r = homogeneous_slemma(f, g, xs);
    auto grid = oracle::feasible_grid(f, g, 4, Rational(1, 8));
    if (r.outcome == SlemmaOutcome::Certificate) {
      ++certs;
      check_certificate(f, g, r);
      // points of S(g) satisfy f >= 0
      for (int k = 0; k < 200; ++k) {
        RationalVector y = oracle::random_point(rng, n, 5, 4);
        if (g.evaluate(y) >= 0) CHECK(f.evaluate(y) >= 0);
      }
    } else if (r.outcome == SlemmaOutcome::Refutation) {
      ++refs;
      CHECK(grid.empty());
      if (r.witness) {
        CHECK(g.evaluate(*r.witness) >= 0);
        CHECK(f.evaluate(*r.witness) < 0);
      }
    }
    // convexity of the feasible set on the grid
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      Rational mid = (grid[i] + grid.back()) / 2;
      CHECK(oracle::psd_by_principal_minors(oracle::gram_naive(f - g * mid)));
    }
    if (!grid.empty()) CHECK(r.outcome != SlemmaOutcome::Refutation);
  }
  CHECK(certs > 10);
  CHECK(refs > 10);
}

TEST_CASE("certificates satisfy f >= 0 on sampled S(g)") {
  Polynomial f = P("2*x1^2 - x2^2 + x3^2", 3), g = P("x1^2 - x2^2 - x3*x1", 3);
  SlemmaResult r = homogeneous_slemma(f, g, {1, 0, 0});
  REQUIRE(r.outcome == SlemmaOutcome::Certificate);
  std::mt19937_64 rng(7);
  int in_s = 0;
  for (int k = 0; k < 10000; ++k) {
    RationalVector y = oracle::random_point(rng, 3, 6, 5);
    if (g.evaluate(y) < 0) continue;
    ++in_s;
    CHECK(f.evaluate(y) >= 0);
  }
  CHECK(in_s > 1000);
}

TEST_CASE("affine certificate also certifies the homogenized pair") {
  std::mt19937_64 rng(103);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    Polynomial g = oracle::random_poly(rng, 2, 2, 4, 3, 1);
    if (g.evaluate({0, 0}) <= 0) g = g + Polynomial::constant(2, 1 - g.evaluate({0, 0}));
    Polynomial f = g * oracle::random_rational(rng, 2) + oracle::random_poly(rng, 2, 2, 2, 1, 1) +
                   Polynomial::constant(2, 2);
    SlemmaResult r = affine_slemma(f, g, {0, 0});
    if (r.outcome != SlemmaOutcome::Certificate) continue;
    ++checked;
    const Rational& t = r.certificate->t;
    CHECK(verify_scalar_certificate(f, g, t));
    Polynomial fb = homogenize_to(f, 2), gb = homogenize_to(g, 2);
    CHECK(oracle::psd_by_principal_minors(oracle::gram_naive(fb - gb * t)));
  }
  CHECK(checked > 5);
}

TEST_CASE("no_constant_multiplier") {
  Polynomial g = P("x1^2 - x2^2", 2);
  Verdict a = no_constant_multiplier(P("x1^4 - x1^2*x2^2", 2), g);
  CHECK(a.is_proved());
  REQUIRE(a.witness);

  CHECK(no_constant_multiplier(g, g).is_disproved());

  Polynomial f = P("x1^4 - x2^4", 2);
  Verdict c = no_constant_multiplier(f, g);
  CHECK(c.is_proved());
  // ratio oracle along (k, 0): f/g = k^2, below any t > 0 for small k
  for (int j = 1; j < 8; ++j) {
    Rational k(1, 1 << j);
    CHECK(f.evaluate({k, 0}) / g.evaluate({k, 0}) == k * k);
  }

  // x1^2 + x2^2 >= 0 with t = 0, so a multiplier exists
  CHECK_FALSE(no_constant_multiplier(P("x1^4 + x2^4", 2), g).is_proved());
}

}  // TEST_SUITE
