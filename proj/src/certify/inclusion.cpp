#include <stdexcept>

#include "slemmakit/certify.hpp"
#include "slemmakit/sampling.hpp"

namespace slemmakit {

namespace {

std::string interval_text(const RealRoot& r) {
  return "root of " + format(r.poly, "u") + " in (" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
}

}  // namespace

Verdict univariate_inclusion(const UPoly& g, const UPoly& f) {
  if (f.is_zero()) return Verdict::proved("f is identically zero");
  if (g.is_zero()) {
    Verdict v = univariate_nonneg(f);
    v.reason = "g is identically zero; " + v.reason;
    return v;
  }
  UPoly h = squarefree_part(f * g);
  auto roots = isolate_squarefree(h);
  for (const Rational& x : gap_points(roots))
    if (g.eval(x) >= 0 && f.eval(x) < 0)
      return Verdict::disproved("sign table: g >= 0 and f < 0 on an open interval", {x});
  for (const auto& r : roots) {
    int sg = sign_at_root(g, r), sf = sign_at_root(f, r);
    if (sg >= 0 && sf < 0) {
      if (r.exact()) return Verdict::disproved("sign table: violation at a rational root", {r.hi});
      Verdict v;
      v.kind = VerdictKind::Disproved;
      v.reason = "sign table: violation only at an irrational point";
      v.note("algebraic_witness", interval_text(r));
      return v;
    }
  }
  Verdict v = Verdict::proved("sign table over the real roots of f*g");
  v.note("breakpoints", std::to_string(roots.size()));
  return v;
}

Verdict binary_form_inclusion(const Polynomial& g, const Polynomial& f) {
  if (g.nvars() != 2 || f.nvars() != 2 || !g.is_homogeneous() || !f.is_homogeneous())
    throw std::invalid_argument("binary inclusion needs two binary forms");
  RationalVector origin{0, 0};
  if (g.evaluate(origin) >= 0 && f.evaluate(origin) < 0)
    return Verdict::disproved("violation at the origin", origin);
  RationalVector west{-1, 0};
  if (g.evaluate(west) >= 0 && f.evaluate(west) < 0)
    return Verdict::disproved("violation in the direction missed by the circle parameterization", west);
  // x = (1 - u^2, 2u) sweeps every other direction
  auto on_circle = [](const Polynomial& p) {
    UPoly one_minus_u2(std::vector<Rational>{1, 0, -1});
    UPoly two_u(std::vector<Rational>{0, 2});
    UPoly r;
    for (const auto& [e, c] : p.terms()) r += UPoly::constant(c) * pow(one_minus_u2, e[0]) * pow(two_u, e[1]);
    return r;
  };
  UPoly G = on_circle(g), F = on_circle(f);
  Verdict v = univariate_inclusion(G, F);
  if (v.is_disproved() && v.witness) {
    Rational u = (*v.witness)[0];
    v.witness = RationalVector{1 - u * u, 2 * u};
    v.note("u", to_string(u));
  }
  v.reason = "circle parameterization; " + v.reason;
  return v;
}

Verdict inclusion_check(const Polynomial& g, const Polynomial& f, const SamplingConfig& cfg) {
  if (g.nvars() != f.nvars()) throw std::invalid_argument("inclusion_check: nvars mismatch");
  if (f.nvars() == 1) return univariate_inclusion(to_upoly(g), to_upoly(f));
  if (f.nvars() == 2 && g.is_homogeneous() && f.is_homogeneous()) return binary_form_inclusion(g, f);
  if (auto hit = falsify_inclusion(g, f, cfg)) {
    Verdict v = Verdict::disproved("sampled point with g >= 0 and f < 0", hit->point);
    v.note("sample_index", std::to_string(hit->index));
    v.note("g", to_string(g.evaluate(hit->point)));
    v.note("f", to_string(f.evaluate(hit->point)));
    return v;
  }
  Verdict v = Verdict::unknown("no counterexample in budget");
  v.note("budget", std::to_string(cfg.budget));
  v.note("seed", std::to_string(cfg.seed));
  return v;
}

}  // namespace slemmakit
