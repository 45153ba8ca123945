#include <algorithm>
#include <deque>
#include <stdexcept>

#include "slemmakit/stability.hpp"

namespace slemmakit {

TentacleSpec TentacleSpec::monomial(Box box, Grading z) {
  TentacleSpec t;
  t.box = std::move(box);
  t.powers = std::move(z);
  return t;
}

TentacleSpec TentacleSpec::rational(Box box, std::vector<UniRational> phi) {
  TentacleSpec t;
  t.box = std::move(box);
  t.fractions = std::move(phi);
  return t;
}

std::vector<UniRational> TentacleSpec::motion() const {
  if (!powers) return fractions;
  std::vector<UniRational> out;
  for (long zi : powers->z) {
    Polynomial lam = Polynomial::monomial({static_cast<unsigned>(std::abs(zi))}, 1);
    Polynomial one = Polynomial::constant(1, 1);
    out.push_back(zi >= 0 ? UniRational::make(lam, one) : UniRational::make(one, lam));
  }
  return out;
}

void TentacleSpec::validate() const {
  if (box.empty()) throw std::invalid_argument("tentacle box is empty");
  for (const auto& iv : box)
    if (!(iv.lo < iv.hi)) throw std::invalid_argument("tentacle box must have nonempty interior");
  if (powers) {
    if (powers->z.size() != box.size()) throw std::invalid_argument("grading length does not match box");
    return;
  }
  if (fractions.size() != box.size()) throw std::invalid_argument("need one fraction per coordinate");
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const auto& f = fractions[i];
    if (f.numerator.is_zero()) throw std::invalid_argument("phi_" + std::to_string(i + 1) + " is zero");
    UPoly d = to_upoly(f.denominator);
    bool pole = d.eval(1) == 0;
    if (!pole && d.degree() > 0) pole = SturmSequence(squarefree_part(d)).count(1, cauchy_bound(d) + 1) > 0;
    if (pole) throw std::invalid_argument("phi_" + std::to_string(i + 1) + " has a pole in [1, oo)");
  }
}

Grading tentacle_degree(const TentacleSpec& t) {
  if (t.powers) return *t.powers;
  Grading z;
  for (const auto& f : t.fractions) z.z.push_back(f.degree());
  return z;
}

namespace {

// g(phi(l) x) times a positive power product of denominators, as coefficients of l^k in x
std::vector<Polynomial> lift(const Polynomial& g, const std::vector<UniRational>& phi) {
  std::size_t n = g.nvars();
  std::vector<UPoly> num, den;
  std::vector<unsigned> even;
  for (std::size_t i = 0; i < n; ++i) {
    num.push_back(to_upoly(phi[i].numerator));
    den.push_back(to_upoly(phi[i].denominator));
    unsigned d = g.degree_in(i);
    even.push_back(d + d % 2);
  }
  std::vector<Polynomial> coeffs;
  for (const auto& [e, c] : g.terms()) {
    UPoly l = UPoly::constant(c);
    for (std::size_t i = 0; i < n; ++i) l = l * pow(num[i], e[i]) * pow(den[i], even[i] - e[i]);
    for (int k = 0; k <= l.degree(); ++k) {
      if (l.coeff(k) == 0) continue;
      if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(k + 1, Polynomial(n));
      coeffs[k].add_term(e, l.coeff(k));
    }
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

UPoly at_point(const std::vector<Polynomial>& coeffs, const RationalVector& x) {
  std::vector<Rational> c;
  for (const auto& p : coeffs) c.push_back(p.evaluate(x));
  return UPoly(c);
}

// some lambda >= 1 with h(lambda) < 0
std::optional<Rational> negative_lambda(const UPoly& h) {
  if (h.is_zero()) return std::nullopt;
  std::vector<Rational> cand{1};
  if (h.degree() > 0) {
    if (h.lc() < 0) cand.push_back(std::max<Rational>(1, cauchy_bound(h) + 1));
    RootIsolation iso = isolate_real_roots(h);
    for (const auto& s : gap_points(iso.roots))
      if (s >= 1) cand.push_back(s);
  }
  for (const auto& s : cand)
    if (h.eval(s) < 0) return s;
  return std::nullopt;
}

struct Cell {
  Box box;
  std::vector<int> depth;
};

// does interval arithmetic show sum c_k l^k >= 0 on cell x [1, oo)?
bool certify_cell(const std::vector<Polynomial>& coeffs, const Box& box, std::size_t& budget) {
  if (coeffs.empty()) return true;
  std::vector<Interval> enc;
  for (const auto& c : coeffs) enc.push_back(enclose(c, box));
  const Interval& top = enc.back();
  if (top.lo <= 0) return false;
  Rational m = 0;
  for (std::size_t k = 0; k + 1 < enc.size(); ++k) m = std::max<Rational>(m, enc[k].magnitude());
  Rational lam0 = std::max<Rational>(1, 1 + m / top.lo);
  std::deque<Interval> todo{Interval(1, lam0)};
  while (!todo.empty()) {
    if (budget == 0) return false;
    --budget;
    Interval l = todo.front();
    todo.pop_front();
    Interval acc(0);
    for (std::size_t k = 0; k < enc.size(); ++k) acc = acc + enc[k] * pow(l, k);
    if (acc.lo >= 0) continue;
    if (l.width() * 4096 < lam0) return false;
    Rational mid = l.midpoint();
    todo.emplace_back(l.lo, mid);
    todo.emplace_back(mid, l.hi);
  }
  return true;
}

}  // namespace

Verdict tentacle_in_set(const TentacleSpec& t, const std::vector<Polynomial>& gens, const TentacleOptions& opt) {
  t.validate();
  std::size_t n = t.dimension();
  std::vector<UniRational> phi = t.motion();
  std::vector<std::vector<Polynomial>> lifted;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("generator dimension does not match the tentacle");
    lifted.push_back(lift(g, phi));
  }

  auto point_of = [&](const RationalVector& x, const Rational& lam) {
    RationalVector y(n);
    for (std::size_t i = 0; i < n; ++i)
      y[i] = to_upoly(phi[i].numerator).eval(lam) / to_upoly(phi[i].denominator).eval(lam) * x[i];
    return y;
  };

  std::deque<Cell> todo{Cell{t.box, std::vector<int>(n, 0)}};
  std::size_t budget = opt.max_cells, cells = 0;
  bool exhausted = false;
  while (!todo.empty()) {
    Cell c = std::move(todo.front());
    todo.pop_front();
    ++cells;
    RationalVector x = center(c.box);
    bool ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (auto lam = negative_lambda(at_point(lifted[i], x))) {
        RationalVector y = point_of(x, *lam);
        Verdict v = Verdict::disproved("the tentacle leaves S: generator " + std::to_string(i + 1) + " is negative", y);
        v.note("x", to_string(x));
        v.note("lambda", to_string(*lam));
        v.note("value", to_string(gens[i].evaluate(y)));
        return v;
      }
      if (ok && !certify_cell(lifted[i], c.box, budget)) ok = false;
    }
    if (ok) continue;
    if (budget == 0 || cells >= opt.max_cells) {
      exhausted = true;
      break;
    }
    std::size_t axis = std::min_element(c.depth.begin(), c.depth.end()) - c.depth.begin();
    if (c.depth[axis] >= opt.max_depth) {
      exhausted = true;
      continue;
    }
    auto [a, b] = bisect(c.box, axis);
    std::vector<int> d = c.depth;
    ++d[axis];
    todo.push_back(Cell{a, d});
    todo.push_back(Cell{b, d});
  }
  if (exhausted) {
    Verdict v = Verdict::unknown("subdivision ceiling reached without a certificate or a counterexample");
    v.note("cells", std::to_string(cells));
    return v;
  }
  Verdict v = Verdict::proved("interval arithmetic certifies every generator on the tentacle");
  v.note("cells", std::to_string(cells));
  return v;
}

}  // namespace slemmakit
