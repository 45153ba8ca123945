#include "slemmakit/slemma.hpp"

#include <algorithm>
#include <map>

#include "slemmakit/sampling.hpp"

namespace slemmakit {

std::string to_string(SlemmaOutcome o) {
  switch (o) {
    case SlemmaOutcome::Certificate: return "certificate";
    case SlemmaOutcome::Refutation: return "refutation";
    case SlemmaOutcome::BoundaryOnly: return "boundary_only";
  }
  return "refutation";
}

namespace {

Matrix pencil(const GramMatrix& af, const GramMatrix& ag, const Rational& t) { return (af - ag * t).entries; }

Matrix submatrix(const Matrix& m, unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (mask >> i & 1) idx.push_back(i);
  Matrix s(idx.size(), RationalVector(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = m[idx[i]][idx[j]];
  return s;
}

// det of the principal submatrix on mask, as a polynomial in t
UPoly minor_poly(const GramMatrix& af, const GramMatrix& ag, unsigned mask) {
  std::vector<Rational> xs, ys;
  int k = __builtin_popcount(mask);
  for (int i = 0; i <= k; ++i) {
    xs.emplace_back(i);
    ys.push_back(determinant(submatrix(pencil(af, ag, i), mask)));
  }
  return interpolate(xs, ys);
}

struct Pencil {
  GramMatrix af, ag;
  std::map<unsigned, UPoly> minors;

  const UPoly& minor(unsigned mask) {
    auto it = minors.find(mask);
    if (it == minors.end()) it = minors.emplace(mask, minor_poly(af, ag, mask)).first;
    return it->second;
  }

  bool psd_at(const RealRoot& r) {
    if (r.exact()) return is_psd(af - ag * r.hi);
    unsigned full = (1u << af.n) - 1;
    for (unsigned mask = 1; mask <= full; ++mask)
      if (sign_at_root(minor(mask), r) < 0) return false;
    return true;
  }
};

RealRoot exact_point(const Rational& q) { return {UPoly::linear_root(q), q, q, 1}; }

// real roots of h strictly inside (a, b), ascending; h must not vanish at a or b
std::vector<RealRoot> roots_between(const UPoly& h, const Rational& a, const Rational& b) {
  std::vector<RealRoot> out;
  for (auto r : isolate_squarefree(squarefree_part(h))) {
    while (!r.exact() && r.lo < a && r.hi > a) refine(r, (r.hi - r.lo) / 2);
    while (!r.exact() && r.lo < b && r.hi > b) refine(r, (r.hi - r.lo) / 2);
    bool inside = r.exact() ? (r.hi > a && r.hi < b) : (r.lo >= a && r.hi <= b);
    if (inside) out.push_back(r);
  }
  return out;
}

UPoly strip_root(UPoly h, const Rational& q) {
  while (!h.is_zero() && h.degree() >= 1 && h.eval(q) == 0) h = divmod(h, UPoly::linear_root(q)).first;
  return h;
}

std::optional<RationalVector> line_witness(const Polynomial& f, const Polynomial& g, const RationalVector& base,
                                           const RationalVector& dir) {
  UPoly G = restrict_to_line(g, base, dir), F = restrict_to_line(f, base, dir);
  Verdict v = univariate_inclusion(G, F);
  if (!v.is_disproved() || !v.witness) return std::nullopt;
  RationalVector y(base.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = base[i] + (*v.witness)[0] * dir[i];
  return y;
}

std::optional<RationalVector> search_witness(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                                             const Pencil& pen, const std::vector<Rational>& probes,
                                             const SamplingConfig& cfg) {
  std::size_t n = f.nvars();
  RationalVector origin(n, 0);
  for (const Rational& t : probes) {
    auto v = negative_direction(pen.af - pen.ag * t);
    if (!v) continue;
    if (auto y = line_witness(f, g, origin, *v)) return y;
    if (auto y = line_witness(f, g, slater, *v)) return y;
    for (const auto& k : kernel(pen.ag))
      if (auto y = line_witness(f, g, *v, k)) return y;
  }
  Verdict v = inclusion_check(g, f, cfg);
  if (v.is_disproved() && v.witness) return v.witness;
  return std::nullopt;
}

}  // namespace

bool verify_scalar_certificate(const Polynomial& f, const Polynomial& g, const Rational& t) {
  if (t < 0) return false;
  Polynomial r = f - g * t;
  if (r.is_zero()) return true;
  if (r.degree().value() > 2) return false;
  return is_psd(gram_of(homogenize_to(r, 2)));
}

SlemmaResult homogeneous_slemma(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                                const SamplingConfig& cfg) {
  if (f.nvars() != g.nvars() || slater.size() != f.nvars()) throw std::invalid_argument("dimension mismatch");
  if (!is_quadratic_form(f) || !is_quadratic_form(g)) throw std::invalid_argument("expected quadratic forms");
  Rational gs = g.evaluate(slater);
  if (gs <= 0) throw SlaterError("Slater condition fails: g(" + to_string(slater) + ") = " + to_string(gs));

  SlemmaResult res;
  Pencil pen{gram_of(f), gram_of(g), {}};
  auto certify_at = [&](const Rational& t) {
    res.outcome = SlemmaOutcome::Certificate;
    res.certificate = ScalarCertificate{t, diagonalize(pen.af - pen.ag * t)};
  };

  if (is_psd(pen.af)) {
    res.trace.push_back("A_f is PSD, t = 0");
    certify_at(0);
    res.feasible.empty = false;
    res.feasible.lower = exact_point(0);
    return res;
  }
  Rational upper = f.evaluate(slater) / gs;
  res.trace.push_back("upper bracket f(x')/g(x') = " + to_string(upper));
  if (upper < 0) {
    res.trace.push_back("f(x') < 0 < g(x'): the Slater point itself refutes");
    res.witness = slater;
    return res;
  }

  unsigned full = (1u << pen.af.n) - 1;
  UPoly h = pen.minor(full);
  if (h.is_zero()) {
    res.trace.push_back("det(A_f - t A_g) vanishes identically; using all principal minors");
    h = UPoly::constant(1);
    for (unsigned mask = 1; mask <= full; ++mask) {
      const UPoly& m = pen.minor(mask);
      if (!m.is_zero() && m.degree() >= 1) h = h * m.primitive();
    }
  } else {
    res.trace.push_back("det(A_f - t A_g) = " + format(h, "t"));
  }

  // breakpoints 0 < r_1 < ... < r_k < upper, with the gaps between them
  std::vector<RealRoot> pts{exact_point(0)};
  if (upper > 0) {
    UPoly inner = h.degree() >= 1 ? strip_root(strip_root(h, 0), upper) : h;
    for (auto& r : roots_between(inner, 0, upper)) pts.push_back(r);
    pts.push_back(exact_point(upper));
  }
  std::vector<Rational> gaps = gap_points(pts);
  // elements alternate: point 0, gap, point 1, gap, ...; outer gaps are outside [0, upper]
  struct Element {
    bool is_gap;
    RealRoot point;
    Rational sample;
    bool feasible;
  };
  std::vector<Element> elems;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    elems.push_back({false, pts[i], pts[i].hi, pen.psd_at(pts[i])});
    if (i + 1 < pts.size()) elems.push_back({true, {}, gaps[i + 1], is_psd(pen.af - pen.ag * gaps[i + 1])});
  }
  std::size_t first = elems.size(), last = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].feasible) {
      first = std::min(first, i);
      last = i;
    }

  if (first == elems.size()) {
    res.feasible.empty = true;
    res.trace.push_back("no feasible t among " + std::to_string(elems.size()) + " breakpoints and gaps");
    std::vector<Rational> probes;
    for (const auto& e : elems) probes.push_back(e.is_gap ? e.sample : e.point.hi);
    res.witness = search_witness(f, g, slater, pen, probes, cfg);
    if (!res.witness) res.trace.push_back("witness search exhausted");
    return res;
  }

  res.feasible.empty = false;
  auto endpoint = [&](std::size_t i, bool low) {
    // a feasible gap is closed off by its neighbouring breakpoint
    return elems[i].is_gap ? elems[low ? i - 1 : i + 1].point : elems[i].point;
  };
  res.feasible.lower = endpoint(first, true);
  res.feasible.upper = endpoint(last, false);

  if (first == last && !elems[first].is_gap) {
    const RealRoot& r = elems[first].point;
    if (r.exact()) {
      res.trace.push_back("feasible set is the single point t = " + to_string(r.hi));
      certify_at(r.hi);
    } else {
      res.feasible.boundary_only = true;
      res.outcome = SlemmaOutcome::BoundaryOnly;
      res.trace.push_back("feasible set is a single irrational point in (" + to_string(r.lo) + ", " + to_string(r.hi) + "]");
    }
    return res;
  }
  const RealRoot& lo = *res.feasible.lower;
  const RealRoot& hi = *res.feasible.upper;
  if (lo.exact() && hi.exact()) {
    certify_at((lo.hi + hi.hi) / 2);
  } else {
    std::size_t mid = (first + last) / 2;
    if (!elems[mid].is_gap) mid = mid + 1 <= last ? mid + 1 : mid - 1;
    certify_at(elems[mid].sample);
  }
  res.trace.push_back("t = " + to_string(res.certificate->t) + " from the feasible interval");
  return res;
}

SlemmaResult affine_slemma(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                           const SamplingConfig& cfg) {
  std::size_t n = f.nvars();
  if (g.nvars() != n || slater.size() != n) throw std::invalid_argument("dimension mismatch");
  for (const Polynomial* p : {&f, &g})
    if (!p->is_zero() && p->degree().value() > 2) throw std::invalid_argument("affine S-lemma needs degree <= 2");
  Rational gs = g.evaluate(slater);
  if (gs <= 0) throw SlaterError("Slater condition fails: g(" + to_string(slater) + ") = " + to_string(gs));

  std::map<std::size_t, Polynomial> shift;
  for (std::size_t i = 0; i < n; ++i)
    shift.emplace(i, Polynomial::variable(n, i) + Polynomial::constant(n, slater[i]));
  Polynomial fh = homogenize_to(substitute(f, shift), 2);
  Polynomial gh = homogenize_to(substitute(g, shift), 2);
  RationalVector e(n + 1, 0);
  e[n] = 1;
  SlemmaResult res = homogeneous_slemma(fh, gh, e, cfg);
  res.trace.insert(res.trace.begin(), "homogenized after moving the Slater point to the origin: f~ = " +
                                          format(fh) + ", g~ = " + format(gh));
  if (res.witness) {
    RationalVector w = *res.witness;
    std::optional<RationalVector> y;
    if (w[n] != 0) {
      y = RationalVector(n);
      for (std::size_t i = 0; i < n; ++i) (*y)[i] = w[i] / w[n] + slater[i];
    } else {
      // witness at infinity: tilt it off the hyperplane y = 0
      for (int k = 1; k <= 80 && !y; ++k)
        for (int s : {1, -1}) {
          w[n] = Rational(s) / pow(Rational(2), k);
          if (gh.evaluate(w) >= 0 && fh.evaluate(w) < 0) {
            y = RationalVector(n);
            for (std::size_t i = 0; i < n; ++i) (*y)[i] = w[i] / w[n] + slater[i];
            break;
          }
        }
    }
    res.witness = y;
  }
  if (!res.witness && res.outcome == SlemmaOutcome::Refutation) {
    Verdict v = inclusion_check(g, f, cfg);
    if (v.is_disproved() && v.witness) res.witness = v.witness;
  }
  return res;
}

std::optional<RationalVector> find_slater_point(const Polynomial& g, const SamplingConfig& cfg) {
  auto hit = first_hit_serial(
      cfg.budget, [&](std::size_t i) { return inclusion_candidates(g, i, cfg); },
      [&](const RationalVector& y) { return g.evaluate(y) > 0; });
  if (hit) return hit->point;
  return std::nullopt;
}

namespace {

struct RayLimit {
  bool ok = false;  // lim f/g <= 0 with g > 0 along the ray
  bool toward_zero = true;
};

// orders and leading coefficients of f, g on k -> k x0, for k -> 0+ or k -> +inf
RayLimit ray_limit(const UPoly& F, const UPoly& G, bool toward_zero) {
  RayLimit r;
  r.toward_zero = toward_zero;
  if (G.is_zero()) return r;
  int og = toward_zero ? G.order() : G.degree();
  Rational cg = G.coeff(og);
  if (cg <= 0) return r;
  if (F.is_zero()) {
    r.ok = true;
    return r;
  }
  int of = toward_zero ? F.order() : F.degree();
  Rational cf = F.coeff(of);
  int d = toward_zero ? of - og : og - of;  // > 0 means f/g -> 0
  r.ok = d > 0 || (d == 0 && cf <= 0) || (d < 0 && cf < 0);
  return r;
}

}  // namespace

Verdict no_constant_multiplier(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("nvars mismatch");
  std::size_t n = f.nvars();
  bool low_degree = (f.is_zero() || f.degree().value() <= 2) && (g.is_zero() || g.degree().value() <= 2);
  if (low_degree && !g.is_zero()) {
    if (auto xs = find_slater_point(g)) {
      SlemmaResult s = affine_slemma(f, g, *xs);
      if (s.outcome == SlemmaOutcome::Certificate)
        return Verdict::disproved("a constant multiplier exists", {s.certificate->t}).note("t", to_string(s.certificate->t));
      if (s.outcome == SlemmaOutcome::BoundaryOnly) {
        Verdict v;
        v.kind = VerdictKind::Disproved;
        v.reason = "an irrational constant multiplier exists";
        return v;
      }
      return Verdict::proved("feasible set of the S-lemma pencil is empty");
    }
  }

  SamplingConfig cfg;
  cfg.budget = 4000;
  // t = 0 needs some point with f < 0
  auto neg = first_hit_serial(
      cfg.budget, [&](std::size_t i) { return inclusion_candidates(f, i, cfg); },
      [&](const RationalVector& y) { return f.evaluate(y) < 0; });
  if (!neg) return Verdict::unknown("no point with f < 0 found, so t = 0 is not excluded");

  RationalVector origin(n, 0);
  for (std::size_t i = 0; i < cfg.budget; ++i) {
    RationalVector x0 = sample_point(cfg.seed, i, n, cfg);
    if (i < 2 * n) {
      x0.assign(n, 0);
      x0[i % n] = i < n ? 1 : -1;
    }
    if (std::all_of(x0.begin(), x0.end(), [](const Rational& c) { return c == 0; })) continue;
    UPoly F = restrict_to_line(f, origin, x0), G = restrict_to_line(g, origin, x0);
    for (bool toward_zero : {true, false}) {
      RayLimit lim = ray_limit(F, G, toward_zero);
      if (!lim.ok) continue;
      Verdict v = Verdict::proved(std::string("along k*x0 with k -> ") + (toward_zero ? "0" : "infinity") +
                                  ", g > 0 and f/g tends to a limit <= 0, so f - t g < 0 for each t > 0");
      v.witness = x0;
      v.note("x0", to_string(x0));
      v.note("f(k x0)", format(F, "k"));
      v.note("g(k x0)", format(G, "k"));
      v.note("t=0 witness", to_string(neg->point));
      // spot checks of the limit argument at a few t
      for (const Rational& t : RationalVector{1, Rational(1, 10), Rational(1, 1000), 100}) {
        UPoly R = F - G * t;
        for (int j = 0; j <= 400; ++j) {
          Rational k = toward_zero ? Rational(1) / pow(Rational(2), j) : pow(Rational(2), j);
          if (R.eval(k) < 0) {
            v.note("t=" + to_string(t), "k = " + to_string(k) + ", f - t g = " + to_string(R.eval(k)));
            break;
          }
        }
      }
      return v;
    }
  }
  return Verdict::unknown("no ray with f/g -> limit <= 0 found");
}

}  // namespace slemmakit
