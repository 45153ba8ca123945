#include <algorithm>
#include <stdexcept>

#include "slemmakit/certify.hpp"

namespace slemmakit {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Proved: return "Proved";
    case VerdictKind::Disproved: return "Disproved";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

Verdict univariate_nonneg(const UPoly& p) {
  if (p.is_zero()) return Verdict::proved("zero polynomial");
  if (p.degree() == 0) {
    if (p.lc() > 0) return Verdict::proved("positive constant");
    return Verdict::disproved("negative constant", {0});
  }
  Rational b = cauchy_bound(p);
  if (p.degree() % 2 == 1) {
    Rational x = p.lc() > 0 ? -b : b;
    return Verdict::disproved("odd degree", {x}).note("value", to_string(p.eval(x)));
  }
  if (p.lc() < 0) return Verdict::disproved("negative leading coefficient", {b}).note("value", to_string(p.eval(b)));

  SquarefreeDecomposition sq = squarefree_decomposition(p);
  bool odd_real = false;
  for (const auto& f : sq.factors)
    if (f.multiplicity % 2 == 1 && f.factor.degree() >= 1 && SturmSequence(f.factor).count_all() > 0) odd_real = true;
  if (!odd_real) {
    Verdict v = Verdict::proved("odd-multiplicity square-free parts have no real root");
    for (const auto& f : sq.factors)
      v.note("factor^" + std::to_string(f.multiplicity), format(f.factor));
    return v;
  }
  auto roots = isolate_squarefree(squarefree_part(p));
  for (const Rational& x : gap_points(roots))
    if (p.eval(x) < 0) return Verdict::disproved("sign change at a real root of odd multiplicity", {x}).note("value", to_string(p.eval(x)));
  throw std::logic_error("odd-multiplicity real root without a sign change");
}

Verdict univariate_nonneg(const Polynomial& p) {
  if (p.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
  return univariate_nonneg(to_upoly(p));
}

namespace {

// (1,0), (0,1), (1,1), (1,-1), then growing integer pairs
std::vector<RationalVector> probe_pairs() {
  std::vector<RationalVector> out{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (long r = 2; r <= 6; ++r)
    for (long k = -r; k <= r; ++k) {
      out.push_back({r, k});
      out.push_back({k, r});
    }
  return out;
}

UPoly dehomogenize_at(const Polynomial& p, std::size_t fixed) {
  // fixed variable set to 1, the other becomes t
  std::size_t other = 1 - fixed;
  std::vector<Rational> c(p.degree().value() + 1, 0);
  for (const auto& [e, coef] : p.terms()) c[e[other]] += coef;
  return UPoly(c);
}

}  // namespace

Verdict binary_form_nonneg(const Polynomial& p) {
  if (p.nvars() != 2 || !p.is_homogeneous()) throw std::invalid_argument("expected a binary form");
  if (p.is_zero()) return Verdict::proved("zero form");
  long d = p.degree().value();
  if (d % 2 == 1) {
    auto pts = probe_pairs();
    for (const auto& x : pts)
      if (p.evaluate(x) < 0) return Verdict::disproved("odd-degree form", x).note("value", to_string(p.evaluate(x)));
    for (const auto& x : pts)
      if (p.evaluate(x) > 0) {
        RationalVector y{-x[0], -x[1]};
        return Verdict::disproved("odd-degree form", y).note("value", to_string(p.evaluate(y)));
      }
    throw std::logic_error("nonzero form vanished on all probe points");
  }
  Verdict a = univariate_nonneg(dehomogenize_at(p, 0));
  if (a.is_disproved()) {
    RationalVector w{1, (*a.witness)[0]};
    return Verdict::disproved("p(1,t) takes a negative value", w).note("value", to_string(p.evaluate(w)));
  }
  Verdict b = univariate_nonneg(dehomogenize_at(p, 1));
  if (b.is_disproved()) {
    RationalVector w{(*b.witness)[0], 1};
    return Verdict::disproved("p(t,1) takes a negative value", w).note("value", to_string(p.evaluate(w)));
  }
  return Verdict::proved("both dehomogenizations are nonnegative");
}

RaySign ray_asymptotic_sign(const Polynomial& p, const RationalVector& x, const Grading& z) {
  // lambda^k > 0 for lambda > 0, so a Laurent shift keeps the sign
  UPoly u = to_upoly(compose_ray_laurent(p, x, z).numerator);
  RaySign r;
  r.threshold = 1;
  if (u.is_zero()) return r;
  r.sign = sign(u.lc());
  if (u.degree() >= 1) r.threshold = std::max<Rational>(1, cauchy_bound(u));
  return r;
}

}  // namespace slemmakit
