#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "slemmakit/counterforge.hpp"
#include "slemmakit/quadform.hpp"
#include "slemmakit/roots.hpp"

namespace slemmakit {

namespace {

constexpr std::size_t kUnknowns = 6;
const std::vector<std::string> kNames{"a1", "a2", "a3", "a4", "a5", "a6"};
// (i, j) position of each unknown in the Gram matrix
const std::pair<std::size_t, std::size_t> kSlot[kUnknowns] = {{0, 0}, {1, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 2}};

Polynomial s_poly(long c, unsigned k = 1) {
  Polynomial p(1);
  p.add_term({k}, c);
  return p;
}

using Residual = std::map<Exponent, LinearForm>;

// f - t g with t = sum a_k m_k
Residual symbolic_residual(const Polynomial& f, const Polynomial& g) {
  Residual r;
  auto at = [&](const Exponent& e) -> LinearForm& {
    auto it = r.find(e);
    if (it == r.end()) it = r.emplace(e, LinearForm(kUnknowns)).first;
    return it->second;
  };
  for (const auto& [e, c] : f.terms()) at(e).constant += c;
  auto basis = quadratic_multiplier_basis();
  for (std::size_t k = 0; k < kUnknowns; ++k) {
    Polynomial mg = basis[k] * g;
    for (const auto& [e, c] : mg.terms()) at(e).coeff[k] -= c;
  }
  return r;
}

// [k][j]: coefficient of s^k c^j; one-parameter curves only have j = 0
using Restricted = std::vector<std::vector<LinearForm>>;

Restricted restrict_residual(const Residual& r, const RestrictionCurve& c) {
  std::size_t m = c.front().nvars();
  Restricted out;
  for (const auto& [e, form] : r) {
    Polynomial mon = Polynomial::constant(m, 1);
    for (std::size_t i = 0; i < e.size(); ++i) mon *= pow(c[i], e[i]);
    for (const auto& [d, v] : mon.terms()) {
      std::size_t k = d[0], j = m > 1 ? d[1] : 0;
      if (out.size() <= k) out.resize(k + 1);
      if (out[k].size() <= j) out[k].resize(j + 1, LinearForm(kUnknowns));
      out[k][j] += form * v;
    }
  }
  return out;
}

LinearForm evaluate_residual(const Residual& r, const RationalVector& y) {
  LinearForm out(kUnknowns);
  for (const auto& [e, form] : r) {
    Rational m = 1;
    for (std::size_t i = 0; i < e.size(); ++i) m *= pow(y[i], e[i]);
    out += form * m;
  }
  return out;
}

// "a4 <= 0" style when a single unknown is involved
std::string describe(const LinearForm& f, bool equality) {
  std::size_t nz = 0, k = 0;
  for (std::size_t i = 0; i < f.coeff.size(); ++i)
    if (f.coeff[i] != 0) ++nz, k = i;
  if (nz != 1) return format(f, kNames) + (equality ? " = 0" : " >= 0");
  Rational bound = -f.constant / f.coeff[k];
  std::string op = equality ? " = " : (f.coeff[k] > 0 ? " >= " : " <= ");
  return kNames[k] + op + to_string(bound);
}

LinearForm normalized(LinearForm f) {
  for (const auto& c : f.coeff)
    if (c != 0) {
      f *= Rational(1) / abs(c);
      break;
    }
  return f;
}

class Builder {
 public:
  Builder(QuadraticRefutation& out) : out_(out) {}

  bool contradiction() const { return contradiction_; }
  const std::string& contradiction_reason() const { return why_; }

  EqualityReducer reducer() const { return EqualityReducer(out_.system.equalities, kUnknowns); }

  bool add_eq(const LinearForm& f, const std::string& origin) {
    LinearForm r = reducer().reduce(f);
    if (r.is_constant()) {
      if (r.constant != 0) fail(origin + ": " + to_string(r.constant) + " = 0 is impossible");
      return false;
    }
    out_.system.add_eq(r);
    out_.trace.push_back(origin + ": " + describe(r, true));
    return true;
  }

  bool add_ge(const LinearForm& f, const std::string& origin, bool quiet = false) {
    LinearForm r = normalized(reducer().reduce(f));
    if (r.is_constant()) {
      if (r.constant < 0) fail(origin + ": " + to_string(r.constant) + " >= 0 is impossible");
      return false;
    }
    if (!seen_.insert(key(r)).second) return false;
    out_.system.add_ge(r);
    if (!quiet) out_.trace.push_back(origin + ": " + describe(r, false));
    return true;
  }

  // extreme coefficients of a univariate polynomial that has to be nonnegative
  bool scan(const std::vector<LinearForm>& c, bool from_top, const std::string& where, const std::string& var) {
    bool learnt = false;
    for (std::size_t step = 0; step < c.size() && !contradiction_; ++step) {
      std::size_t k = from_top ? c.size() - 1 - step : step;
      LinearForm r = reducer().reduce(c[k]);
      std::string origin = where + ", coefficient of " + var + "^" + std::to_string(k);
      if (r.is_constant()) {
        if (r.constant == 0) continue;
        if (k % 2 == 1) fail(origin + " is the nonzero constant " + to_string(r.constant) + " at odd degree");
        else if (r.constant < 0) fail(origin + " is the negative constant " + to_string(r.constant));
        return learnt;
      }
      if (k % 2 == 1) {
        learnt |= add_eq(r, origin);
        continue;
      }
      learnt |= add_ge(r, origin);
      return learnt;
    }
    return learnt;
  }

  // same in s when each coefficient is itself a polynomial in c that must hold for every c
  bool scan_s(const Restricted& C, bool from_top, const std::string& where) {
    bool learnt = false;
    for (std::size_t step = 0; step < C.size() && !contradiction_; ++step) {
      std::size_t k = from_top ? C.size() - 1 - step : step;
      const auto& ck = C[k];
      if (ck.size() <= 1) {
        std::vector<LinearForm> one{ck.empty() ? LinearForm(kUnknowns) : ck[0]};
        LinearForm r = reducer().reduce(one[0]);
        std::string origin = where + ", coefficient of s^" + std::to_string(k);
        if (r.is_constant()) {
          if (r.constant == 0) continue;
          if (k % 2 == 1) fail(origin + " is the nonzero constant " + to_string(r.constant) + " at odd degree");
          else if (r.constant < 0) fail(origin + " is the negative constant " + to_string(r.constant));
          return learnt;
        }
        if (k % 2 == 1) {
          learnt |= add_eq(r, origin);
          continue;
        }
        learnt |= add_ge(r, origin);
        return learnt;
      }
      std::string origin = where + ", coefficient of s^" + std::to_string(k);
      std::vector<LinearForm> red;
      bool all_zero = true, all_const = true;
      for (const auto& f : ck) {
        red.push_back(reducer().reduce(f));
        all_zero = all_zero && red.back().is_constant() && red.back().constant == 0;
        all_const = all_const && red.back().is_constant();
      }
      if (all_zero) continue;
      if (k % 2 == 1) {
        for (std::size_t j = 0; j < red.size() && !contradiction_; ++j) {
          LinearForm r = reducer().reduce(red[j]);
          if (r.is_constant()) {
            if (r.constant != 0) fail(origin + " does not vanish identically in c");
            continue;
          }
          learnt |= add_eq(r, origin + " c^" + std::to_string(j));
        }
        continue;
      }
      if (all_const) {
        std::vector<Rational> v;
        for (const auto& f : red) v.push_back(f.constant);
        if (!univariate_nonneg(UPoly(v)).is_proved()) fail(origin + " is negative for some c");
        return learnt;
      }
      learnt |= scan(red, true, origin + " as a polynomial in c", "c");
      if (!contradiction_) learnt |= scan(red, false, origin + " as a polynomial in c", "c");
      return learnt;
    }
    return learnt;
  }

  // a vanishing diagonal entry of a PSD matrix kills its row
  bool psd_rows() {
    bool learnt = false;
    for (std::size_t d : {0u, 1u, 5u}) {
      std::size_t i = kSlot[d].first;
      LinearForm r = reducer().reduce(LinearForm::variable(kUnknowns, d));
      if (!r.is_constant() || r.constant != 0) continue;
      for (std::size_t k = 0; k < kUnknowns; ++k) {
        auto [a, b] = kSlot[k];
        if (a == b || (a != i && b != i)) continue;
        learnt |= add_eq(LinearForm::variable(kUnknowns, k), kNames[d] + " = 0 and t >= 0");
      }
    }
    return learnt;
  }

 private:
  static std::string key(const LinearForm& f) { return to_string(f.coeff) + "|" + to_string(f.constant); }
  void fail(const std::string& why) {
    if (!contradiction_) why_ = why;
    contradiction_ = true;
  }

  QuadraticRefutation& out_;
  std::set<std::string> seen_;
  bool contradiction_ = false;
  std::string why_;
};

GramMatrix gram_from(const RationalVector& a) {
  GramMatrix m = GramMatrix::zero(3);
  for (std::size_t k = 0; k < kUnknowns; ++k) {
    auto [i, j] = kSlot[k];
    if (i == j)
      m.entries[i][i] = a[k];
    else
      m.entries[i][j] = m.entries[j][i] = a[k] / 2;
  }
  return m;
}

LinearForm t_at(const RationalVector& v) {
  LinearForm f(kUnknowns);
  auto basis = quadratic_multiplier_basis();
  for (std::size_t k = 0; k < kUnknowns; ++k) f.coeff[k] = basis[k].evaluate(v);
  return f;
}

// a nearby point with small denominators where p is still negative; p is a form of even degree
RationalVector simplify_witness(const Polynomial& p, RationalVector y) {
  Rational m = 0;
  for (const auto& c : y) m = std::max<Rational>(m, abs(c));
  if (m == 0) return y;
  for (auto& c : y) c /= m;
  for (unsigned j = 0; j < 40; ++j) {
    Rational scale = pow(Rational(2), j);
    RationalVector z;
    for (const auto& c : y) z.push_back(floor_q(c * scale + Rational(1, 2)));
    if (p.evaluate(z) < 0) return z;
  }
  return y;
}

}  // namespace

std::vector<RestrictionCurve> default_restriction_curves() {
  Polynomial s = s_poly(1), zero(1), one = Polynomial::constant(1, 1);
  std::vector<RestrictionCurve> out{{s, zero, one}, {zero, s, one}, {one, zero, s},
                                    {zero, one, s}, {s, one, zero}, {one, s, zero}};
  // two parameters: s runs along one axis, c along another, the third coordinate is fixed
  Polynomial S = Polynomial::variable(2, 0), C = Polynomial::variable(2, 1);
  for (long fixed : {1L, 0L})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        RestrictionCurve c(3, Polynomial::constant(2, fixed));
        c[i] = S;
        c[j] = C;
        out.push_back(c);
      }
  return out;
}

std::string format(const RestrictionCurve& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i)
    out += (i ? ", " : "") + (c[i].nvars() == 1 ? format(c[i], {"s"}) : format(c[i], {"s", "c"}));
  return out + ")";
}

std::vector<Polynomial> quadratic_multiplier_basis() {
  std::vector<Polynomial> b;
  for (auto [i, j] : kSlot) {
    Exponent e(3, 0);
    ++e[i];
    ++e[j];
    b.push_back(Polynomial::monomial(e, 1));
  }
  return b;
}

Polynomial multiplier_from(const RationalVector& a) {
  if (a.size() != kUnknowns) throw std::invalid_argument("need six coefficients");
  Polynomial t(3);
  auto basis = quadratic_multiplier_basis();
  for (std::size_t k = 0; k < kUnknowns; ++k) t += basis[k] * a[k];
  return t;
}

std::optional<RationalVector> form_negativity_witness(const Polynomial& p, std::size_t planes, std::uint64_t seed) {
  std::size_t n = p.nvars();
  const long vals[] = {0, 1, -1, 2, -2};
  for (long radius : {1L, 2L}) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      RationalVector y(n);
      long norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = vals[idx[i]];
        norm = std::max(norm, std::abs(vals[idx[i]]));
      }
      if (norm == radius && p.evaluate(y) < 0) return y;
      std::size_t i = n;
      while (i-- > 0) {
        if (++idx[i] < 5) break;
        idx[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  if (n < 2) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-3, 3);
  Polynomial X = Polynomial::variable(2, 0), Y = Polynomial::variable(2, 1);
  for (std::size_t k = 0; k < planes; ++k) {
    RationalVector u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = d(rng), v[i] = d(rng);
    bool dependent = true;
    for (std::size_t i = 0; i < n && dependent; ++i)
      for (std::size_t j = i + 1; j < n && dependent; ++j)
        if (u[i] * v[j] != u[j] * v[i]) dependent = false;
    if (dependent) continue;
    std::map<std::size_t, Polynomial> sub;
    for (std::size_t i = 0; i < n; ++i) sub[i] = X * u[i] + Y * v[i];
    Polynomial b = substitute(p, sub);
    if (b.is_zero()) continue;
    Verdict v2 = b.is_homogeneous() ? binary_form_nonneg(b) : Verdict::unknown("not a form");
    if (!v2.is_disproved() || !v2.witness) continue;
    RationalVector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = u[i] * (*v2.witness)[0] + v[i] * (*v2.witness)[1];
    if (p.evaluate(y) < 0) return p.is_homogeneous() && p.degree().value() % 2 == 0 ? simplify_witness(p, y) : y;
  }
  return std::nullopt;
}

QuadraticRefutation refute_quadratic_multiplier(const Polynomial& f, const Polynomial& g,
                                                std::vector<RestrictionCurve> curves, const RefuteOptions& opt) {
  QuadraticRefutation out;
  out.system = LinearConstraintSystem(kNames);
  out.pinned.assign(kUnknowns, std::nullopt);
  if (f.nvars() != 3 || g.nvars() != 3 || !f.is_homogeneous() || !g.is_homogeneous() || f.is_zero() || g.is_zero() ||
      f.degree().value() != 4 || g.degree().value() != 2) {
    out.verdict = Verdict::unknown("expects a ternary quartic f and a ternary quadratic form g");
    return out;
  }
  if (curves.empty()) curves = default_restriction_curves();
  for (const auto& c : curves) {
    if (c.size() != 3) throw std::invalid_argument("restriction curves need three coordinates");
    for (const auto& x : c)
      if (x.nvars() != c.front().nvars() || x.nvars() > 2)
        throw std::invalid_argument("curve coordinates must be polynomials in s or in (s, c)");
  }

  Residual res = symbolic_residual(f, g);
  Builder b(out);
  out.trace.push_back("t = a1*x1^2 + a2*x2^2 + a3*x1*x2 + a4*x1*x3 + a5*x2*x3 + a6*x3^2");
  for (std::size_t d : {0u, 1u, 5u}) b.add_ge(LinearForm::variable(kUnknowns, d), "t >= 0", true);
  for (std::size_t k = 0; k < kUnknowns; ++k) {
    auto [i, j] = kSlot[k];
    if (i == j) continue;
    std::size_t di = i == 0 ? 0 : i == 1 ? 1 : 5, dj = j == 1 ? 1 : 5;
    LinearForm s = LinearForm::variable(kUnknowns, di) + LinearForm::variable(kUnknowns, dj);
    b.add_ge(s + LinearForm::variable(kUnknowns, k), "2x2 minor", true);
    b.add_ge(s - LinearForm::variable(kUnknowns, k), "2x2 minor", true);
  }

  auto finish_contradiction = [&](const std::string& why) {
    out.trace.push_back("contradiction: " + why);
    out.verdict = Verdict::proved("no nonnegative quadratic multiplier: " + why);
    return out;
  };

  // one-parameter curves first; two-parameter ones only if a family survives them
  std::vector<RestrictionCurve> lines, sheets;
  for (const auto& c : curves) (c.front().nvars() == 1 ? lines : sheets).push_back(c);
  EliminationResult er;
  auto all_pinned = [&] {
    return std::all_of(er.pinned.begin(), er.pinned.end(), [](const auto& p) { return p.has_value(); });
  };
  for (int phase = 0; phase < 2; ++phase) {
    std::vector<RestrictionCurve> active = lines;
    if (phase == 1) {
      if (sheets.empty()) break;
      active.insert(active.end(), sheets.begin(), sheets.end());
    }
    bool progress = true;
    while (progress && !b.contradiction()) {
      progress = false;
      for (const auto& c : active) {
        auto coeffs = restrict_residual(res, c);
        std::string where = "f - t g on " + format(c);
        progress |= b.scan_s(coeffs, true, where);
        if (!b.contradiction()) progress |= b.scan_s(coeffs, false, where);
        if (!b.contradiction()) progress |= b.psd_rows();
        if (b.contradiction()) break;
      }
    }
    if (b.contradiction()) return finish_contradiction(b.contradiction_reason());
    try {
      er = eliminate(out.system);
    } catch (const EliminationLimit& e) {
      out.verdict = Verdict::unknown(std::string("elimination gave up: ") + e.what());
      return out;
    }
    if (!er.feasible) return finish_contradiction(er.reason);
    out.pinned = er.pinned;
    if (all_pinned()) break;
  }

  if (all_pinned()) {
    RationalVector a;
    for (const auto& p : er.pinned) a.push_back(*p);
    Polynomial t = multiplier_from(a);
    out.candidate = t;
    out.trace.push_back("unique candidate t = " + format(t));
    if (auto v = negative_direction(gram_from(a))) {
      out.verdict = Verdict::proved("the only candidate t = " + format(t) + " is not nonnegative");
      out.verdict.note("t", format(t)).note("direction", to_string(*v)).note("t(direction)", to_string(t.evaluate(*v)));
      return out;
    }
    Polynomial r = f - t * g;
    out.residual = r;
    out.trace.push_back("f - t g = " + format(r));
    auto y = form_negativity_witness(r, opt.planes_per_search, opt.seed);
    if (!y) {
      out.verdict = Verdict::unknown("the unique candidate survives the witness search");
      out.verdict.note("t", format(t));
      return out;
    }
    out.trace.push_back("f - t g at " + to_string(*y) + " = " + to_string(r.evaluate(*y)));
    out.verdict = Verdict::proved("no nonnegative quadratic multiplier: the only candidate leaves a negative residual");
    out.verdict.witness = *y;
    out.verdict.note("t", format(t)).note("residual", format(r)).note("witness", to_string(*y));
    out.verdict.note("value", to_string(r.evaluate(*y)));
    return out;
  }

  // a family survives: cut it down with point evaluations, each a necessary linear condition
  out.trace.push_back("restrictions leave a family of candidates; adding point cuts");
  for (; out.cuts < opt.max_cuts; ++out.cuts) {
    try {
      er = eliminate(out.system, EliminationOptions{8, 20000, false});
    } catch (const EliminationLimit& e) {
      out.verdict = Verdict::unknown(std::string("elimination gave up: ") + e.what());
      return out;
    }
    if (!er.feasible) {
      std::string why = "after " + std::to_string(out.cuts) + " point cuts: " + er.reason;
      return finish_contradiction(why);
    }
    const RationalVector& a = *er.point;
    Polynomial t = multiplier_from(a);
    if (auto v = negative_direction(gram_from(a))) {
      RationalVector w = simplify_witness(t, *v);
      b.add_ge(t_at(w), "t(" + to_string(w) + ") >= 0", true);
      continue;
    }
    Polynomial r = f - t * g;
    auto y = form_negativity_witness(r, opt.planes_per_search, opt.seed + out.cuts);
    if (!y) {
      out.candidate = t;
      out.verdict = Verdict::unknown("candidate multiplier not refuted");
      out.verdict.note("t", format(t)).note("cuts", std::to_string(out.cuts));
      return out;
    }
    b.add_ge(evaluate_residual(res, *y), "(f - t g)(" + to_string(*y) + ") >= 0", true);
    if (b.contradiction()) return finish_contradiction(b.contradiction_reason());
  }
  out.verdict = Verdict::unknown("cut budget exhausted");
  out.verdict.note("cuts", std::to_string(out.cuts));
  return out;
}

}  // namespace slemmakit

namespace slemmakit {

EpsilonSearch find_working_epsilon(const Polynomial& f, const Polynomial& g, unsigned max_halvings,
                                   const RefuteOptions& opt) {
  EpsilonSearch out;
  Rational eps(1, 2);
  for (unsigned k = 0; k < max_halvings; ++k, eps /= 2) {
    NamedInstance inst = perturb(f, g, eps);
    Verdict inc = inclusion_check(inst.g, inst.f);
    if (inc.is_disproved()) {
      out.log.push_back("eps = " + to_string(eps) + ": inclusion fails");
      continue;
    }
    QuadraticRefutation ref = refute_quadratic_multiplier(inst.f, inst.g, {}, opt);
    out.log.push_back("eps = " + to_string(eps) + ": inclusion " + to_string(inc.kind) + ", refutation " +
                      to_string(ref.verdict.kind) + " (" + ref.verdict.reason + ")");
    if (!ref.verdict.is_proved()) continue;
    out.epsilon = eps;
    out.instance = inst;
    out.inclusion = inc;
    out.refutation = ref;
    return out;
  }
  throw std::runtime_error("no working eps found in " + std::to_string(max_halvings) + " halvings");
}

}  // namespace slemmakit
