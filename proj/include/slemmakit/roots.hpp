#pragma once

#include <vector>

#include "slemmakit/upoly.hpp"

namespace slemmakit {

// one real root of a squarefree polynomial, inside (lo, hi]; lo == hi means exact
struct RealRoot {
  UPoly poly;
  Rational lo, hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

struct RootIsolation {
  SquarefreeDecomposition square_free_parts;
  std::vector<RealRoot> roots;  // ascending
  int nonreal_count = 0;        // degree minus real roots with multiplicity
};

RootIsolation isolate_real_roots(const UPoly& p);

// roots of a squarefree polynomial, ascending
std::vector<RealRoot> isolate_squarefree(const UPoly& q);

void refine(RealRoot& r, const Rational& width);
// shrink intervals until consecutive roots are separated by a positive gap
void separate(std::vector<RealRoot>& roots);
// rational points strictly between consecutive roots, plus one on each side
std::vector<Rational> gap_points(std::vector<RealRoot>& roots);

// exact sign of f at the algebraic number r
int sign_at_root(const UPoly& f, RealRoot r);

// rational with the smallest denominator in the open interval (lo, hi)
Rational simplest_between(const Rational& lo, const Rational& hi);

// s -> p(base + s * dir)
UPoly restrict_to_line(const Polynomial& p, const RationalVector& base, const RationalVector& dir);

}  // namespace slemmakit
