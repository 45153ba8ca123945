#include "slemmakit/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace slemmakit {

Interval::Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {
  if (b < a) throw std::invalid_argument("interval with lo > hi");
}

Rational Interval::magnitude() const { return std::max<Rational>(abs(lo), abs(hi)); }

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval(1);
  Rational l = 1, h = 1;
  for (unsigned i = 0; i < k; ++i) {
    l *= a.lo;
    h *= a.hi;
  }
  if (k % 2 == 1 || a.lo >= 0) return Interval(l, h);
  if (a.hi <= 0) return Interval(h, l);
  return Interval(0, std::max<Rational>(l, h));
}

Interval enclose(const Polynomial& p, const Box& box) {
  if (box.size() != p.nvars()) throw std::invalid_argument("box dimension does not match nvars");
  Interval acc(0);
  for (const auto& [e, c] : p.terms()) {
    Interval t(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * pow(box[i], e[i]);
    acc = acc + t;
  }
  return acc;
}

std::pair<Box, Box> bisect(const Box& box, std::size_t axis) {
  Box a = box, b = box;
  Rational m = box[axis].midpoint();
  a[axis].hi = m;
  b[axis].lo = m;
  return {a, b};
}

RationalVector center(const Box& box) {
  RationalVector c;
  for (const auto& iv : box) c.push_back(iv.midpoint());
  return c;
}

}  // namespace slemmakit
