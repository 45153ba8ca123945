#pragma once

#include <vector>

#include "slemmakit/polynomial.hpp"

namespace slemmakit {

// closed rational interval, lo <= hi
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& a) : lo(a), hi(a) {}
  Interval(const Rational& a, const Rational& b);

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational magnitude() const;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval pow(const Interval& a, unsigned k);

using Box = std::vector<Interval>;

Interval enclose(const Polynomial& p, const Box& box);
std::pair<Box, Box> bisect(const Box& box, std::size_t axis);
RationalVector center(const Box& box);

}  // namespace slemmakit
