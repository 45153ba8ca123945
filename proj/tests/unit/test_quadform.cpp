#include <doctest.h>

#include "oracles.hpp"
#include "slemmakit/quadform.hpp"

using namespace slemmakit;

namespace {

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }

GramMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  GramMatrix g = GramMatrix::zero(n);
  switch (rng() % 3) {
    case 0:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Rational v = oracle::random_rational(rng, 3, 2);
          g.entries[i][j] = g.entries[j][i] = v;
        }
      break;
    default: {
      // B^T D B with D mostly nonnegative; hits the semidefinite boundary often
      Matrix b(n, RationalVector(n));
      for (auto& row : b)
        for (auto& v : row) v = oracle::random_rational(rng, 2, 1);
      GramMatrix d = GramMatrix::zero(n);
      for (std::size_t i = 0; i < n; ++i) d.entries[i][i] = Rational(int(rng() % 3)) - (rng() % 7 == 0 ? 1 : 0);
      g = d.congruent(b);
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("quadform") {

TEST_CASE("gram_of examples") {
  GramMatrix g = gram_of(P("x1*x3 + x2*x3 + x1*x2", 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(g(i, j) == (i == j ? Rational(0) : make_rational(1, 2)));
  CHECK(form_of(g) == P("x1*x3 + x2*x3 + x1*x2", 3));
  GramMatrix h = gram_of(P("x1^2 - x2^2", 2));
  CHECK(h(0, 0) == 1);
  CHECK(h(1, 1) == -1);
  CHECK(h(0, 1) == 0);
  CHECK(gram_of(Polynomial(3)) == GramMatrix::zero(3));
  CHECK_THROWS(gram_of(P("x1^3", 2)));
}

TEST_CASE("is_psd examples") {
  CHECK_FALSE(is_psd(gram_of(P("x1^2 - x2^2", 2))));
  CHECK(is_psd(gram_of(P("1/2*x1^2 + 1/2*x2^2", 2))));
  CHECK_FALSE(is_psd(gram_of(P("x1*x2", 2))));
  CHECK(is_psd(gram_of(P("x1^2 - 2*x1*x2 + x2^2", 2))));
  CHECK(is_psd(GramMatrix::zero(3)));
}

TEST_CASE("signature examples") {
  CHECK(signature(gram_of(P("x1*x3 + x2*x3 + x1*x2", 3))) == Signature{1, 2, 0});
  Polynomial g = P("-3 + x1 - x2", 2) * P("3 + x1 - x2", 2);
  Signature s = signature(gram_of(homogenize(g)));
  CHECK(s.n_pos == s.n_neg);
  CHECK(signature(GramMatrix{3, identity_matrix(3)}) == Signature{3, 0, 0});
}

TEST_CASE("diagonalization is an exact congruence") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 5;
    GramMatrix a = random_symmetric(rng, n);
    Diagonalization d = diagonalize(a);
    GramMatrix c = a.congruent(d.congruence);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(c(i, j) == (i == j ? d.diagonal[i] : Rational(0)));
    CHECK(oracle::det_cofactor(d.congruence) != 0);
    for (const auto& v : kernel(a)) CHECK(mat_vec(a.entries, v) == RationalVector(n, 0));
    CHECK(kernel(a).size() + rank(a) == n);
  }
}

TEST_CASE("is_psd agrees with the principal-minor oracle") {
  std::mt19937_64 rng(22);
  int psd_count = 0;
  for (int it = 0; it < 500; ++it) {
    std::size_t n = 1 + rng() % 5;
    GramMatrix a = random_symmetric(rng, n);
    bool expect = oracle::psd_by_principal_minors(a.entries);
    psd_count += expect;
    CHECK(is_psd(a) == expect);
  }
  CHECK(psd_count > 100);
}

TEST_CASE("Sylvester invariance") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 150; ++it) {
    std::size_t n = 1 + rng() % 4;
    GramMatrix a = random_symmetric(rng, n);
    Matrix s(n, RationalVector(n));
    do {
      for (auto& row : s)
        for (auto& v : row) v = oracle::random_rational(rng, 3, 2);
    } while (oracle::det_cofactor(s) == 0);
    CHECK(signature(a.congruent(s)) == signature(a));
  }
}

TEST_CASE("rank-one decomposition") {
  auto terms = rank_one_decomposition(GramMatrix::outer({1, 2}));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].weight == 1);
  CHECK(terms[0].vector == RationalVector{1, 2});

  GramMatrix d = GramMatrix::zero(3);
  d.entries[0][0] = 2;
  d.entries[2][2] = 3;
  CHECK(rank_one_decomposition(d).size() == 2);

  std::mt19937_64 rng(24);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng() % 5;
    GramMatrix a = random_symmetric(rng, n);
    if (!is_psd(a)) {
      CHECK_THROWS(rank_one_decomposition(a));
      continue;
    }
    auto parts = rank_one_decomposition(a);
    GramMatrix sum = GramMatrix::zero(n);
    for (const auto& t : parts) {
      CHECK(t.weight > 0);
      GramMatrix o = GramMatrix::outer(t.vector) * t.weight;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sum.entries[i][j] += o(i, j);
    }
    CHECK(sum == a);
    CHECK(parts.size() == rank(a));
  }
  // (x1 + x2)^2 + x2^2
  Polynomial sq = pow(P("x1 + x2", 2), 2) + P("x2^2", 2);
  auto two = rank_one_decomposition(gram_of(sq));
  CHECK(two.size() == 2);
  Polynomial back(2);
  for (const auto& t : two) back += form_of(GramMatrix::outer(t.vector)) * t.weight;
  CHECK(back == sq);
}

TEST_CASE("trace pairing") {
  GramMatrix f = gram_of(P("x1^2 - x2^2", 2));
  CHECK(trace_pair(f, GramMatrix::outer({2, 1})) == 3);
  GramMatrix id{2, identity_matrix(2)};
  CHECK(trace_pair(f, id) == 0);
  GramMatrix e1 = GramMatrix::zero(2), e2 = GramMatrix::zero(2);
  e1.entries[0][0] = 1;
  e2.entries[1][1] = 1;
  CHECK(trace_pair(e1, e2) == 0);

  std::mt19937_64 rng(25);
  for (int it = 0; it < 100; ++it) {
    Polynomial q = oracle::random_poly(rng, 3, 2, 5);
    Polynomial form(3);
    for (const auto& [e, c] : q.terms())
      if (total_degree(e) == 2) form.add_term(e, c);
    auto x = oracle::random_point(rng, 3);
    CHECK(trace_pair(gram_of(form), GramMatrix::outer(x)) == oracle::naive_eval(form, x));
  }
}

TEST_CASE("diagonal part") {
  CHECK(diagonal_part(P("x1*x2 + x2*x3 + x1*x3", 3)).is_zero());
  CHECK(diagonal_part(P("-x1^2 + x1*x2", 2)) == P("-x1^2", 2));
  CHECK(diagonal_part(P("x1^2 + x2^2", 2)) == P("x1^2 + x2^2", 2));
}

}
