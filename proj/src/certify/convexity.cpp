#include <stdexcept>

#include "slemmakit/certify.hpp"
#include "slemmakit/sampling.hpp"

namespace slemmakit {

namespace {

// a real zero direction of a binary form: (1, root) or (0, 1)
struct Direction {
  bool vertical = false;
  RealRoot root;
};

UPoly affine_chart(const Polynomial& p) {
  std::vector<Rational> c(p.is_zero() ? 0 : p.degree().value() + 1, 0);
  for (const auto& [e, coef] : p.terms()) c[e[1]] += coef;
  return UPoly(c);
}

std::vector<Direction> zero_directions(const Polynomial& form) {
  std::vector<Direction> out;
  if (form.evaluate({0, 1}) == 0) out.push_back({true, {}});
  UPoly a = affine_chart(form);
  if (a.degree() >= 1)
    for (auto& r : isolate_squarefree(squarefree_part(a))) out.push_back({false, r});
  return out;
}

int sign_in_direction(const Polynomial& p, const Direction& d) {
  if (d.vertical) return sign(p.evaluate({0, 1}));
  return sign_at_root(affine_chart(p), d.root);
}

RationalVector image(const Polynomial& f1, const Polynomial& f2, const RationalVector& x) {
  return {f1.evaluate(x), f2.evaluate(x)};
}

std::vector<RationalVector> integer_pairs(long radius) {
  std::vector<RationalVector> out{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (long r = 2; r <= radius; ++r)
    for (long k = -r; k <= r; ++k) {
      out.push_back({r, k});
      out.push_back({k, r});
      out.push_back({-r, k});
      out.push_back({k, -r});
    }
  return out;
}

// (a, b) -> f(a x + b y)
Polynomial plane_restriction(const Polynomial& f, const RationalVector& x, const RationalVector& y) {
  std::map<std::size_t, Polynomial> sub;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    sub.emplace(i, Polynomial::variable(2, 0) * x[i] + Polynomial::variable(2, 1) * y[i]);
  return substitute(f, sub);
}

bool proportional(const Polynomial& f1, const Polynomial& f2) {
  if (f1.is_zero() || f2.is_zero()) return true;
  const auto& [e, c] = *f1.terms().begin();
  return f2 == f1 * (f2.coefficient(e) / c);
}

}  // namespace

bool binary_image_contains(const Polynomial& F1, const Polynomial& F2, const RationalVector& m) {
  if (m[0] == 0 && m[1] == 0) return true;
  if (F1.is_zero() && F2.is_zero()) return false;
  long d = std::max(F1.is_zero() ? 0 : F1.degree().value(), F2.is_zero() ? 0 : F2.degree().value());
  Polynomial D = F1 * m[1] - F2 * m[0];
  if (D.is_zero()) {
    // F is parallel to m everywhere; need F.m > 0 somewhere (or any nonzero value in odd degree)
    Polynomial h = F1 * m[0] + F2 * m[1];
    if (d % 2 == 1) return !h.is_zero();
    return binary_form_nonneg(-h).is_disproved();
  }
  std::size_t j = m[0] != 0 ? 0 : 1;
  const Polynomial& Fj = j == 0 ? F1 : F2;
  for (const auto& dir : zero_directions(D)) {
    int s = sign_in_direction(Fj, dir) * sign(m[j]);
    if (s > 0 || (s < 0 && d % 2 == 1)) return true;
  }
  return false;
}

ConvexityProbe joint_range_convexity_probe(const Polynomial& f1, const Polynomial& f2, std::size_t samples,
                                           std::uint64_t seed) {
  if (f1.nvars() != f2.nvars()) throw std::invalid_argument("convexity probe: nvars mismatch");
  if (f1.is_zero() && f2.is_zero()) throw std::invalid_argument("convexity probe: degenerate pair");
  if (!f1.is_homogeneous() || !f2.is_homogeneous()) throw std::invalid_argument("convexity probe needs forms");
  ConvexityProbe out;
  if (proportional(f1, f2) || proportional(f2, f1)) {
    out.verdict = Verdict::proved("f1 and f2 are proportional; M lies on a line through 0 and is connected");
    return out;
  }
  if (f1.degree() != f2.degree()) throw std::invalid_argument("convexity probe needs forms of equal degree");
  long d = f1.degree().value();
  std::size_t n = f1.nvars();
  const Polynomial* fs[2] = {&f1, &f2};

  if (n == 2) {
    auto pts = integer_pairs(6);
    for (int a = 0; a < 2; ++a) {
      const Polynomial& fa = *fs[a];
      const Polynomial& fb = *fs[1 - a];
      auto dirs = zero_directions(fa);
      for (int s : {-1, 1}) {
        // M misses the open half-axis {fa = 0, sign fb = s}?
        bool excluded = true;
        for (const auto& dir : dirs) {
          int sb = sign_in_direction(fb, dir);
          if (sb != 0 && (d % 2 == 1 || sb == s)) excluded = false;
        }
        if (!excluded) continue;
        const RationalVector *neg = nullptr, *pos = nullptr;
        for (const auto& x : pts) {
          if (sign(fb.evaluate(x)) != s) continue;
          Rational va = fa.evaluate(x);
          if (va < 0 && !neg) neg = &x;
          if (va > 0 && !pos) pos = &x;
        }
        if (!neg || !pos) continue;
        RationalVector px = image(f1, f2, *neg), py = image(f1, f2, *pos);
        Rational t = px[a] / (px[a] - py[a]);
        RationalVector cross{(1 - t) * px[0] + t * py[0], (1 - t) * px[1] + t * py[1]};
        RationalVector w = *neg;
        w.insert(w.end(), pos->begin(), pos->end());
        out.verdict = Verdict::disproved("segment of M crosses a half-axis that M provably misses", w);
        out.verdict.note("half_axis", std::string("f") + std::to_string(a + 1) + " = 0, f" + std::to_string(2 - a) +
                                          (s < 0 ? " < 0" : " > 0"));
        out.verdict.note("x", to_string(*neg));
        out.verdict.note("y", to_string(*pos));
        out.verdict.note("phi(x)", to_string(px));
        out.verdict.note("phi(y)", to_string(py));
        out.verdict.note("crossing", to_string(cross));
        out.segment_start = px;
        out.segment_end = py;
        out.crossing = cross;
        return out;
      }
    }
  }

  SamplingConfig cfg;
  cfg.budget = samples * 2;
  for (std::size_t k = 0; k < samples; ++k) {
    RationalVector x = sample_point(seed, 2 * k, n, cfg), y = sample_point(seed, 2 * k + 1, n, cfg);
    RationalVector px = image(f1, f2, x), py = image(f1, f2, y);
    RationalVector m{(px[0] + py[0]) / 2, (px[1] + py[1]) / 2};
    ++out.pairs_tested;
    if (binary_image_contains(plane_restriction(f1, x, y), plane_restriction(f2, x, y), m)) {
      ++out.preimages_found;
      continue;
    }
    bool spans = n == 2 && x[0] * y[1] - x[1] * y[0] != 0;
    if (spans) {
      RationalVector w = x;
      w.insert(w.end(), y.begin(), y.end());
      out.verdict = Verdict::disproved("midpoint of two points of M has no preimage", w);
      out.verdict.note("midpoint", to_string(m));
      out.segment_start = px;
      out.segment_end = py;
      out.crossing = m;
      return out;
    }
  }
  out.verdict = Verdict::unknown("no convexity violation found");
  out.verdict.note("pairs_tested", std::to_string(out.pairs_tested));
  out.verdict.note("preimages_found", std::to_string(out.preimages_found));
  return out;
}

}  // namespace slemmakit
