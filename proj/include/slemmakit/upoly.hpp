#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slemmakit/polynomial.hpp"
#include "slemmakit/rational.hpp"

namespace slemmakit {

// dense univariate polynomial over Q, coefficients low degree first
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly x();
  // (x - r)
  static UPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const;
  const Rational& lc() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }
  UPoly derivative() const;
  UPoly monic() const;
  // positive multiple with coprime integer coefficients
  UPoly primitive() const;
  UPoly compose(const UPoly& inner) const;
  // p(-x)
  UPoly reflect() const;
  // lowest index with nonzero coefficient
  int order() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly pow(const UPoly& p, unsigned k);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

// p = c * prod f_k^k, each f_k squarefree with positive leading coefficient
struct SquarefreeFactor {
  UPoly factor;
  int multiplicity;
};
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;
};
SquarefreeDecomposition squarefree_decomposition(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

// unique polynomial of degree < xs.size() through the points; xs distinct
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// all roots have |x| < bound
Rational cauchy_bound(const UPoly& p);

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  int variations(const Rational& x) const;
  int variations_at_infinity(int side) const;
  // distinct roots in (a, b]
  int count(const Rational& a, const Rational& b) const;
  int count_all() const;
  const std::vector<UPoly>& chain() const { return chain_; }

 private:
  std::vector<UPoly> chain_;
};

UPoly to_upoly(const Polynomial& p);
Polynomial to_polynomial(const UPoly& p);
std::string format(const UPoly& p, const std::string& var = "x");

}  // namespace slemmakit
