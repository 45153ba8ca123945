#include "slemmakit/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace slemmakit {

namespace {

struct Pending {
  Rational lo, hi;
  int count;
};

}  // namespace

std::vector<RealRoot> isolate_squarefree(const UPoly& q) {
  std::vector<RealRoot> out;
  if (q.degree() < 1) return out;
  if (q.degree() == 1) {
    Rational r = -q.coeff(0) / q.coeff(1);
    out.push_back({q.monic(), r, r, 1});
    return out;
  }
  SturmSequence sturm(q);
  Rational b = cauchy_bound(q);
  int total = sturm.count(-b, b);
  if (total == 0) return out;
  // depth-first, left half first, so output comes out ascending
  std::vector<Pending> stack{{-b, b, total}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (q.eval(cur.hi) == 0 && cur.count == 1) {
      out.push_back({q, cur.hi, cur.hi, 1});
      continue;
    }
    if (cur.count == 1) {
      out.push_back({q, cur.lo, cur.hi, 1});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int left = sturm.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  return out;
}

RootIsolation isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  RootIsolation iso;
  iso.square_free_parts = squarefree_decomposition(p);
  UPoly sq = UPoly::constant(1);
  for (const auto& f : iso.square_free_parts.factors) sq = sq * f.factor;
  iso.roots = isolate_squarefree(sq);
  int real_with_mult = 0;
  for (auto& r : iso.roots) {
    for (const auto& f : iso.square_free_parts.factors) {
      bool here = r.exact() ? f.factor.eval(r.hi) == 0 : SturmSequence(f.factor).count(r.lo, r.hi) == 1;
      if (here) {
        r.poly = f.factor;
        r.multiplicity = f.multiplicity;
        break;
      }
    }
    real_with_mult += r.multiplicity;
  }
  iso.nonreal_count = p.degree() - real_with_mult;
  return iso;
}

void refine(RealRoot& r, const Rational& width) {
  if (r.exact()) return;
  std::optional<SturmSequence> sturm;
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    int sm = r.poly.sign_at(mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
      return;
    }
    int slo = r.poly.sign_at(r.lo);
    bool in_left;
    if (slo != 0) {
      in_left = slo != sm;
    } else {
      if (!sturm) sturm.emplace(r.poly);
      in_left = sturm->count(r.lo, mid) == 1;
    }
    if (in_left) r.hi = mid;
    else r.lo = mid;
  }
}

void separate(std::vector<RealRoot>& roots) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i].hi < roots[i + 1].lo) continue;
      for (std::size_t k : {i, i + 1}) {
        RealRoot& r = roots[k];
        if (!r.exact()) refine(r, (r.hi - r.lo) / 2);
      }
      changed = true;
    }
  }
}

std::vector<Rational> gap_points(std::vector<RealRoot>& roots) {
  std::vector<Rational> pts;
  if (roots.empty()) {
    pts.push_back(0);
    return pts;
  }
  separate(roots);
  pts.push_back(roots.front().lo - 1);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) pts.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  pts.push_back(roots.back().hi + 1);
  return pts;
}

int sign_at_root(const UPoly& f, RealRoot r) {
  if (f.is_zero()) return 0;
  if (r.exact()) return f.sign_at(r.hi);
  UPoly g = gcd(f, r.poly);
  if (g.degree() >= 1 && SturmSequence(g).count(r.lo, r.hi) == 1) return 0;
  UPoly fs = squarefree_part(f);
  if (fs.degree() < 1) return f.sign_at(r.hi);
  SturmSequence sf(fs);
  while (true) {
    if (r.exact()) return f.sign_at(r.hi);
    if (sf.count(r.lo, r.hi) == 0) return f.sign_at(r.hi);
    refine(r, (r.hi - r.lo) / 2);
  }
}

namespace {

// 0 <= a < b, b == nullopt meaning +infinity
Rational simplest_nonneg(const Rational& a, const std::optional<Rational>& b) {
  Rational n = floor_q(a) + 1;
  if (!b || n < *b) return n;
  Rational fl = floor_q(a);
  Rational x = a - fl, y = *b - fl;
  std::optional<Rational> inv_x;
  if (x != 0) inv_x = 1 / x;
  return fl + 1 / simplest_nonneg(1 / y, inv_x);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_nonneg(-hi, Rational(-lo));
  return simplest_nonneg(lo, hi);
}

UPoly restrict_to_line(const Polynomial& p, const RationalVector& base, const RationalVector& dir) {
  std::size_t n = p.nvars();
  if (base.size() != n || dir.size() != n) throw std::invalid_argument("line dimension mismatch");
  std::vector<std::vector<UPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    UPoly lin(std::vector<Rational>{base[i], dir[i]});
    powers[i].push_back(UPoly::constant(1));
    for (unsigned k = 1; k <= p.degree_in(i); ++k) powers[i].push_back(powers[i].back() * lin);
  }
  UPoly r;
  for (const auto& [e, c] : p.terms()) {
    UPoly t = UPoly::constant(c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) t = t * powers[i][e[i]];
    r += t;
  }
  return r;
}

}  // namespace slemmakit
