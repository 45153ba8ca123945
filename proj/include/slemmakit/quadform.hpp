#pragma once

#include <optional>
#include <vector>

#include "slemmakit/polynomial.hpp"

namespace slemmakit {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
// throws when singular
Matrix inverse(const Matrix& a);
RationalVector mat_vec(const Matrix& a, const RationalVector& x);

struct GramMatrix {
  std::size_t n = 0;
  Matrix entries;

  static GramMatrix zero(std::size_t n);
  static GramMatrix outer(const RationalVector& x);
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  bool operator==(const GramMatrix& o) const { return entries == o.entries; }
  GramMatrix operator-(const GramMatrix& o) const;
  GramMatrix operator*(const Rational& s) const;
  // S^T A S
  GramMatrix congruent(const Matrix& s) const;
};

bool is_quadratic_form(const Polynomial& q);
GramMatrix gram_of(const Polynomial& q);
// x^T A x as a polynomial in n variables
Polynomial form_of(const GramMatrix& a);

bool is_psd(const GramMatrix& a);

struct Diagonalization {
  Matrix congruence;
  RationalVector diagonal;
};
Diagonalization diagonalize(const GramMatrix& a);

struct Signature {
  std::size_t n_pos = 0, n_neg = 0, n_zero = 0;
  bool operator==(const Signature& o) const {
    return n_pos == o.n_pos && n_neg == o.n_neg && n_zero == o.n_zero;
  }
};
Signature signature(const GramMatrix& a);
std::size_t rank(const GramMatrix& a);
std::vector<RationalVector> kernel(const GramMatrix& a);

// x with x^T A x < 0, if one exists
std::optional<RationalVector> negative_direction(const GramMatrix& a);

struct RankOneTerm {
  Rational weight;
  RationalVector vector;
};
// A = sum weight * v v^T, v primitive integral with positive leading entry
std::vector<RankOneTerm> rank_one_decomposition(const GramMatrix& a);

Rational trace_pair(const GramMatrix& a, const GramMatrix& b);
Polynomial diagonal_part(const Polynomial& q);
Rational determinant(const Matrix& a);

}  // namespace slemmakit
