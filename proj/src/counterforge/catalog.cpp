#include <stdexcept>

#include "slemmakit/counterforge.hpp"

namespace slemmakit {

namespace {

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }

// epsilon found by find_working_epsilon on the ternary pair, pinned so the catalog stays cheap
const Rational kPerturbEpsilon(1, 64);

}  // namespace

std::vector<NamedInstance> catalog() {
  std::vector<NamedInstance> out;
  Polynomial tf = P("x1^3*x3 + x1^3*x2 + x2^2*x3^2", 3), tg = P("x1*x3 + x2*x3 + x1*x2", 3);
  out.push_back({"ternary-counterexample", tf, tg, "ternary quartic f and quadric g with no nonnegative quadratic multiplier", {}});
  NamedInstance pert = perturb(tf, tg, kPerturbEpsilon);
  pert.provenance = "ternary pair with eps*x3^4 and eps*x3^2 added, eps = " + to_string(kPerturbEpsilon);
  out.push_back(pert);
  out.push_back({"dehomog-counterexample", P("x1^3 + x1^3*x2 + x2^2", 2), P("x1 + x2 + x1*x2", 2),
                 "ternary pair at x3 = 1", {}});
  out.push_back({"quartic-no-constant", P("x1^4 - x1^2*x2^2", 2), P("x1^2 - x2^2", 2),
                 "binary quartic with no constant multiplier", {}});
  out.push_back({"convexity-quartics", P("x1^4 - x1*x2^3", 2), P("x1^3*x2 - x1^2*x2^2", 2),
                 "quartic pair whose joint range is not convex", {}});
  Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1), one = Polynomial::constant(2, 1);
  Polynomial l1 = x1 - x2 - one * Rational(3), l2 = x1 - x2 + one * Rational(3);
  Polynomial p = P("-x1^3 + x2^3 + 2*x1 + 1", 2);
  out.push_back({"nongeom", -(l2 * p), l1 * l2, "product of two lines for g, f = -l2 p", {}});
  out.push_back({"quintic-pair", P("x1^5 + x1^5*x2 + x2^2", 2), P("x1 + x2 + x1*x2^3", 2),
                 "quintic pair refuted by sign-flipped tentacles", {}});
  return out;
}

NamedInstance lookup(const std::string& name) {
  for (auto& inst : catalog())
    if (inst.name == name) return inst;
  throw std::out_of_range("unknown catalog instance: " + name);
}

NamedInstance perturb(const Polynomial& f, const Polynomial& g, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (f.nvars() != 3 || g.nvars() != 3) throw std::invalid_argument("perturb expects a ternary pair");
  NamedInstance r;
  r.name = "ternary-perturbed(" + to_string(eps) + ")";
  r.f = f + Polynomial::monomial({0, 0, 4}, eps);
  r.g = g + Polynomial::monomial({0, 0, 2}, eps);
  r.provenance = "perturbation by eps*x3^4, eps*x3^2";
  return r;
}

}  // namespace slemmakit
