#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slemmakit/rational.hpp"

namespace slemmakit {

using Exponent = std::vector<unsigned>;

// graded-lex, larger first; this is also the canonical print order
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

bool lex_less(const Exponent& a, const Exponent& b);
unsigned total_degree(const Exponent& e);

class Degree {
 public:
  static Degree neg_inf() { return Degree(); }
  explicit Degree(long value) : finite_(true), value_(value) {}

  bool is_neg_inf() const { return !finite_; }
  long value() const;

  bool operator==(const Degree& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  bool operator<(const Degree& o) const {
    if (!finite_) return o.finite_;
    return o.finite_ && value_ < o.value_;
  }

 private:
  Degree() = default;
  bool finite_ = false;
  long value_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 1);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  // idx is 0-based
  static Polynomial variable(std::size_t nvars, std::size_t idx);
  static Polynomial monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  Degree degree() const;
  unsigned degree_in(std::size_t var) const;
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational evaluate(const RationalVector& x) const;

 private:
  void check_same(const Polynomial& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

std::vector<std::string> default_names(std::size_t nvars);

// grammar: terms joined by +/-; term = [rational][*]factor(*factor)*;
// factor = name[^exp]; names default to x1..xn
Polynomial parse_polynomial(const std::string& text, std::size_t nvars,
                            const std::vector<std::string>& names = {});
std::string format(const Polynomial& p, const std::vector<std::string>& names = {});

// variables not in the map are kept; all images must share an nvars
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment);
// embed into more variables (new ones unused) or permute via index map
Polynomial extend_vars(const Polynomial& p, std::size_t nvars);
Polynomial permute_vars(const Polynomial& p, const std::vector<std::size_t>& new_index);

Polynomial homogenize(const Polynomial& p);
Polynomial homogenize_to(const Polynomial& p, unsigned degree);
Polynomial dehomogenize(const Polynomial& p, std::size_t var);

Polynomial derivative(const Polynomial& p, std::size_t var);
std::vector<Polynomial> gradient(const Polynomial& p);

// exact division test; returns quotient when divisor | p
bool divides(const Polynomial& divisor, const Polynomial& p, Polynomial* quotient = nullptr);

struct Grading {
  std::vector<long> z;

  bool in_N1() const;
  long weight(const Exponent& e) const;
};

long z_degree(const Polynomial& p, const Grading& z);
Polynomial leading_form_z(const Polynomial& p, const Grading& z);
std::pair<Exponent, Rational> leading_term_lex(const Polynomial& p);

// univariate polynomial in lambda stored as a 1-variable Polynomial
Polynomial compose_ray(const Polynomial& p, const RationalVector& x, const Grading& z);

struct UniRational {
  Polynomial numerator{1};
  Polynomial denominator{1};

  static UniRational make(const Polynomial& num, const Polynomial& den);
  int degree() const;
};

// handles negative weights by clearing the lowest power of lambda
UniRational compose_ray_laurent(const Polynomial& p, const RationalVector& x, const Grading& z);

}  // namespace slemmakit
