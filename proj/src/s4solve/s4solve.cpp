#include "slemmakit/s4solve.hpp"

#include <algorithm>
#include <map>

namespace slemmakit {

std::string to_string(S4Error::Kind k) {
  switch (k) {
    case S4Error::Kind::Precondition: return "precondition";
    case S4Error::Kind::InclusionFails: return "inclusion_fails";
    case S4Error::Kind::ShapeViolation: return "shape_violation";
    case S4Error::Kind::PrecisionCeiling: return "precision_ceiling";
  }
  return "precondition";
}

namespace {

Verdict nonneg(const Polynomial& p) {
  if (p.nvars() == 1) return univariate_nonneg(p);
  return binary_form_nonneg(p);
}

MultiplierCertificate finish(const Polynomial& p, const Polynomial& q, const Polynomial& t, std::string label,
                             std::vector<std::string> trace) {
  MultiplierCertificate c;
  c.t = t;
  c.residual = p - t * q;
  c.t_evidence = nonneg(t);
  c.residual_evidence = nonneg(c.residual);
  c.case_label = std::move(label);
  c.trace = std::move(trace);
  return c;
}

bool accepted(const MultiplierCertificate& c) { return c.t_evidence.is_proved() && c.residual_evidence.is_proved(); }

// rational stand-in for a root: exact when a short rational hits it, else the midpoint at the given width
Rational approximate(RealRoot r, unsigned bits) {
  if (r.exact()) return r.hi;
  refine(r, Rational(1) / pow(Rational(2), bits));
  if (r.exact()) return r.hi;
  Rational s = simplest_between(r.lo, r.hi);
  if (r.poly.eval(s) == 0) return s;
  if (r.poly.eval(r.hi) == 0) return r.hi;
  return r.midpoint();
}

Rational scalar_from_slemma(const UPoly& h, const Polynomial& q, const RationalVector& slater, bool* ok) {
  SlemmaResult s = affine_slemma(to_polynomial(h), q, slater);
  *ok = s.outcome == SlemmaOutcome::Certificate;
  return *ok ? s.certificate->t : Rational(0);
}

}  // namespace

bool verify_multiplier(const Polynomial& f, const Polynomial& g, const MultiplierCertificate& c) {
  if (f - c.t * g - c.residual != Polynomial(f.nvars())) return false;
  return nonneg(c.t).is_proved() && nonneg(c.residual).is_proved();
}

MultiplierCertificate univariate_s4(const Polynomial& p, const Polynomial& q, const RationalVector& slater,
                                   const S4Options& opt) {
  using K = S4Error::Kind;
  if (p.nvars() != 1 || q.nvars() != 1 || slater.size() != 1) throw S4Error(K::Precondition, "expected univariate input");
  Rational qs = q.evaluate(slater);
  if (qs <= 0) throw SlaterError("Slater condition fails: q(" + to_string(slater) + ") = " + to_string(qs));
  long dp = p.is_zero() ? 0 : p.degree().value(), dq = q.degree().value();
  if (dq > 2) throw S4Error(K::Precondition, "q must have degree at most 2");
  std::vector<std::string> trace;

  Verdict inc = univariate_inclusion(to_upoly(q), to_upoly(p));
  if (inc.is_disproved()) {
    std::string where = inc.witness ? " at x = " + to_string(*inc.witness) : "";
    throw S4Error(K::InclusionFails, "S(q) is not contained in S(p)" + where);
  }
  if (dp != 4 && univariate_nonneg(p).is_proved()) return finish(p, q, Polynomial(1), "p nonnegative", {"t = 0"});
  if (dp <= 2) {
    SlemmaResult s = affine_slemma(p, q, slater);
    if (s.outcome != SlemmaOutcome::Certificate) throw S4Error(K::PrecisionCeiling, "no rational scalar multiplier");
    return finish(p, q, Polynomial::constant(1, s.certificate->t), "degree <= 2: S-lemma", s.trace);
  }
  if (dp != 4) throw S4Error(K::Precondition, "p must have degree 4");

  UPoly P = to_upoly(p), Q = to_upoly(q);
  UPoly X = UPoly::x();
  RootIsolation iso = isolate_real_roots(P);

  // Case I: a real multiple root; it is rational since it divides gcd(p, p')
  for (const auto& r : iso.roots) {
    if (r.multiplicity < 2) continue;
    Rational y = approximate(r, 64);
    // an irrational double root only occurs for p = c (x^2 + bx + d)^2
    if (P.eval(y) != 0) continue;
    UPoly s = pow(UPoly::linear_root(y), 2);
    UPoly h = divmod(P, s).first;
    trace.push_back("double root y = " + to_string(y) + ", h = p/(x-y)^2 = " + format(h));
    bool ok;
    Rational tp = scalar_from_slemma(h, q, slater, &ok);
    if (!ok) throw S4Error(K::InclusionFails, "S-lemma failed for (h, q)");
    trace.push_back("t' = " + to_string(tp));
    return finish(p, q, to_polynomial(s * tp), "Case I: real double root", trace);
  }

  if (univariate_nonneg(p).is_proved()) return finish(p, q, Polynomial(1), "p nonnegative", {"t = 0"});

  if (iso.nonreal_count > 0) {
    // Case II: p = h * s with s the quadratic carrying the complex pair
    if (iso.roots.size() != 2) throw S4Error(K::Precondition, "unexpected root structure");
    for (unsigned bits : opt.precision_bits) {
      Rational r1 = approximate(iso.roots[0], bits), r2 = approximate(iso.roots[1], bits);
      UPoly h = (UPoly::linear_root(r1) * UPoly::linear_root(r2)) * P.lc();
      UPoly s = divmod(P, h).first;
      if (s.degree() != 2 || s.lc() <= 0 || s.coeff(1) * s.coeff(1) >= 4 * s.coeff(0) * s.coeff(2)) continue;
      bool ok;
      Rational tp = scalar_from_slemma(h, q, slater, &ok);
      if (!ok) continue;
      std::vector<std::string> tr{"real roots ~ " + to_string(r1) + ", " + to_string(r2) + " at " + std::to_string(bits) + " bits",
                                  "s = " + format(s), "h = " + format(h), "t' = " + to_string(tp)};
      MultiplierCertificate c = finish(p, q, to_polynomial(s * tp), "Case II: complex root pair", tr);
      if (accepted(c)) return c;
    }
    throw S4Error(K::PrecisionCeiling, "Case II: no exact certificate up to the precision ceiling");
  }

  // Case III: four simple real roots
  if (iso.roots.size() != 4) throw S4Error(K::Precondition, "unexpected root structure");
  std::size_t ia, ib;
  int alpha;
  if (Q.lc() > 0) {
    ia = 0;
    ib = 3;
    alpha = 1;
  } else {
    // S(q) is bounded; anchor at the component of S(p) around the Slater point
    SturmSequence st(squarefree_part(P));
    int below = st.count(-cauchy_bound(P), slater[0]);
    if (below < 1 || below > 3) throw S4Error(K::InclusionFails, "Slater point outside the bounded part of S(p)");
    ia = below - 1;
    ib = below;
    alpha = -1;
  }
  for (unsigned bits : opt.precision_bits) {
    Rational ra = approximate(iso.roots[ia], bits), rb = approximate(iso.roots[ib], bits);
    UPoly h = UPoly::linear_root(ra) * UPoly::linear_root(rb) * Rational(alpha);
    UPoly dP = P.derivative(), dh = h.derivative();
    Rational sa = dP.eval(ra) / dh.eval(ra), sb = dP.eval(rb) / dh.eval(rb);
    if (sa <= 0 || sb <= 0) continue;
    UPoly v;
    if (sa <= sb) v = pow(X - UPoly::constant(ra), 2) * ((sb - sa) / ((rb - ra) * (rb - ra))) + UPoly::constant(sa);
    else v = pow(X - UPoly::constant(rb), 2) * ((sa - sb) / ((ra - rb) * (ra - rb))) + UPoly::constant(sb);
    bool ok;
    Rational tp = scalar_from_slemma(h, q, slater, &ok);
    if (!ok) continue;
    std::vector<std::string> tr{
        "anchors x" + std::to_string(ia + 1) + " ~ " + to_string(ra) + ", x" + std::to_string(ib + 1) + " ~ " +
            to_string(rb) + " at " + std::to_string(bits) + " bits",
        "h = " + format(h), "s_a = " + to_string(sa) + ", s_b = " + to_string(sb), "v = " + format(v),
        "w = p - v h = " + format(P - v * h), "t' = " + to_string(tp)};
    std::string label = alpha > 0 ? "Case III: S(q) outside the outer roots" : "Case III: S(q) inside a bounded component";
    MultiplierCertificate c = finish(p, q, to_polynomial(v * tp), label, tr);
    if (accepted(c)) return c;
  }
  throw S4Error(K::PrecisionCeiling, "Case III: no exact certificate up to the precision ceiling");
}

namespace {

Polynomial linear_change(const Polynomial& p, const Matrix& m) {
  // x_i -> sum_j m[i][j] y_j
  std::size_t n = p.nvars();
  std::map<std::size_t, Polynomial> sub;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(n);
    for (std::size_t j = 0; j < n; ++j) img += Polynomial::variable(n, j) * m[i][j];
    sub.emplace(i, img);
  }
  return substitute(p, sub);
}

Rational coeff2(const Polynomial& p, unsigned a, unsigned b) { return p.coefficient({a, b}); }

}  // namespace

MultiplierCertificate bivariate_s4(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                                  const S4Options& opt) {
  using K = S4Error::Kind;
  if (f.nvars() != 2 || g.nvars() != 2 || slater.size() != 2) throw S4Error(K::Precondition, "expected binary forms");
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree().value() != 4))
    throw S4Error(K::Precondition, "f must be a quartic form");
  if (!is_quadratic_form(g) || g.is_zero()) throw S4Error(K::Precondition, "g must be a nonzero quadratic form");
  Rational gs = g.evaluate(slater);
  if (gs <= 0) throw SlaterError("Slater condition fails: g(" + to_string(slater) + ") = " + to_string(gs));

  Verdict inc = binary_form_inclusion(g, f);
  if (inc.is_disproved()) {
    std::string where = inc.witness ? " at " + to_string(*inc.witness) : "";
    throw S4Error(K::InclusionFails, "S(g) is not contained in S(f)" + where);
  }
  if (binary_form_nonneg(f).is_proved()) return finish(f, g, Polynomial(2), "f nonnegative", {"t = 0"});

  Diagonalization d = diagonalize(gram_of(g));
  Matrix S = d.congruence;
  Rational a11 = d.diagonal[0], a22 = d.diagonal[1];
  if (a11 < 0) {
    for (auto& row : S) std::swap(row[0], row[1]);
    std::swap(a11, a22);
  }
  if (!(a11 > 0 && a22 < 0)) throw S4Error(K::Precondition, "g is not indefinite");
  Matrix Sinv = inverse(S);
  Polynomial fp = linear_change(f, S), gp = linear_change(g, S);
  std::vector<std::string> trace{"x = S y with S = " + to_string(S[0]) + ", " + to_string(S[1]) +
                                 " gives g = " + format(gp, {"y1", "y2"}) + ", f = " + format(fp, {"y1", "y2"})};

  Polynomial tp(2);
  std::string label;
  if (coeff2(fp, 4, 0) == 0 && coeff2(fp, 0, 4) == 0) {
    Rational c31 = coeff2(fp, 3, 1), gamma = coeff2(fp, 2, 2), beta = coeff2(fp, 1, 3);
    if (c31 != 0) throw S4Error(K::ShapeViolation, "y1^3 y2 appears in f although deg_y1 f < 4");
    if (gamma <= 0) throw S4Error(K::ShapeViolation, "coefficient of y1^2 y2^2 is not positive");
    Rational b = gamma / a11;
    Rational disc = beta * beta + a22 * a11 * b * b;
    trace.push_back("gamma = " + to_string(gamma) + ", beta = " + to_string(beta) + ", b = " + to_string(b) +
                    ", beta^2 + a11 a22 b^2 = " + to_string(disc));
    if (disc > 0) throw S4Error(K::ShapeViolation, "discriminant condition fails");
    tp = Polynomial::monomial({0, 2}, b / 2);
    label = "Case I: no fourth powers";
  } else {
    bool first = coeff2(fp, 4, 0) != 0;
    std::size_t keep = first ? 0 : 1, drop = 1 - keep;
    Polynomial ft = dehomogenize(fp, drop), gt = dehomogenize(gp, drop);
    // Slater point for the chart
    Rational y = 0;
    if (first) {
      while (a11 * y * y + a22 <= 0) y += 1;
    }
    trace.push_back("dehomogenize at y" + std::to_string(drop + 1) + " = 1: p = " + format(ft, {"x"}) + ", q = " +
                    format(gt, {"x"}));
    MultiplierCertificate u = univariate_s4(ft, gt, {y}, opt);
    for (auto& s : u.trace) trace.push_back("  " + s);
    trace.push_back("univariate t = " + format(u.t, {"x"}));
    Polynomial th = homogenize_to(u.t, 2);
    tp = first ? th : permute_vars(th, {1, 0});
    label = "Case II via univariate " + u.case_label;
  }
  Polynomial t = linear_change(tp, Sinv);
  trace.push_back("t in original coordinates: " + format(t));
  MultiplierCertificate c = finish(f, g, t, label, trace);
  if (!accepted(c)) throw S4Error(K::PrecisionCeiling, "certificate failed exact verification");
  return c;
}

Verdict nonpositive_g_guard(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) {
    Verdict v;
    v.kind = VerdictKind::Disproved;
    v.reason = "g is zero, so it has no Slater point";
    return v;
  }
  if (!is_quadratic_form(g)) throw std::invalid_argument("guard expects a quadratic form g");
  GramMatrix neg = gram_of(-g);
  auto dir = negative_direction(neg);
  if (dir) {
    Verdict v = Verdict::proved("g has a Slater point");
    v.witness = *dir;
    return v;
  }
  Verdict v;
  v.kind = VerdictKind::Disproved;
  v.reason = "g <= 0 everywhere; without a Slater point the multiplier need not exist";
  for (const auto& k : kernel(neg)) {
    if (k.size() < 2) continue;
    // a direction transversal to k
    RationalVector e(k.size(), 0);
    std::size_t i = 0;
    while (i < k.size() && k[i] != 0) ++i;
    e[i < k.size() ? i : 0] = 1;
    UPoly F = restrict_to_line(f, k, e);
    if (F.eval(0) == 0 && F.derivative().eval(0) != 0) {
      v.note("obstruction", "f(k + s e) = " + format(F, "s") + " vanishes to first order at s = 0 while g vanishes to second order, "
                            "so f - t g changes sign near k for every quadratic t");
      v.note("k", to_string(k));
      v.note("e", to_string(e));
    }
  }
  return v;
}

}  // namespace slemmakit
