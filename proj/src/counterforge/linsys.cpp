#include "slemmakit/linsys.hpp"

#include <algorithm>
#include <set>

namespace slemmakit {

LinearForm LinearForm::variable(std::size_t nvars, std::size_t k) {
  LinearForm f(nvars);
  f.coeff.at(k) = 1;
  return f;
}

LinearForm LinearForm::constant_form(std::size_t nvars, const Rational& c) {
  LinearForm f(nvars);
  f.constant = c;
  return f;
}

bool LinearForm::is_constant() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Rational& c) { return c == 0; });
}

Rational LinearForm::evaluate(const RationalVector& a) const {
  Rational r = constant;
  for (std::size_t k = 0; k < coeff.size(); ++k) r += coeff[k] * a.at(k);
  return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (coeff.size() != o.coeff.size()) throw std::invalid_argument("linear forms over different variables");
  for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] += o.coeff[k];
  constant += o.constant;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += o * Rational(-1); }

LinearForm& LinearForm::operator*=(const Rational& s) {
  for (auto& c : coeff) c *= s;
  constant *= s;
  return *this;
}

std::string format(const LinearForm& f, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < f.coeff.size(); ++k) {
    const Rational& c = f.coeff[k];
    if (c == 0) continue;
    std::string mag = abs(c) == 1 ? "" : to_string(Rational(abs(c))) + "*";
    if (out.empty())
      out = (c < 0 ? "-" : "") + mag + names.at(k);
    else
      out += (c < 0 ? " - " : " + ") + mag + names.at(k);
  }
  if (f.constant != 0 || out.empty()) {
    if (out.empty())
      out = to_string(f.constant);
    else
      out += (f.constant < 0 ? " - " : " + ") + to_string(Rational(abs(f.constant)));
  }
  return out;
}

EqualityReducer::EqualityReducer(const std::vector<LinearForm>& eqs, std::size_t nvars) {
  for (LinearForm f : eqs) {
    if (f.coeff.size() != nvars) throw std::invalid_argument("equality has wrong arity");
    f = reduce(f);
    auto it = std::find_if(f.coeff.begin(), f.coeff.end(), [](const Rational& c) { return c != 0; });
    if (it == f.coeff.end()) {
      if (f.constant != 0) consistent_ = false;
      continue;
    }
    std::size_t k = it - f.coeff.begin();
    f *= Rational(1) / f.coeff[k];
    for (auto& [p, row] : rows_)
      if (row.coeff[k] != 0) row -= f * row.coeff[k];
    rows_.emplace_back(k, f);
  }
}

LinearForm EqualityReducer::reduce(const LinearForm& f) const {
  LinearForm r = f;
  for (const auto& [k, row] : rows_)
    if (r.coeff[k] != 0) r -= row * r.coeff[k];
  return r;
}

namespace {

// positive multiple with coprime integer entries, so parallel rows dedupe and sizes stay small
LinearForm normalized(LinearForm f) {
  mpz_class den = f.constant.get_den(), num = f.constant.get_num();
  for (const auto& c : f.coeff) {
    den = lcm(den, mpz_class(c.get_den()));
    num = gcd(num, mpz_class(c.get_num()));
  }
  if (num == 0) return f;
  f *= Rational(den, abs(num));
  return f;
}

struct FormLess {
  bool operator()(const LinearForm& a, const LinearForm& b) const {
    if (a.coeff != b.coeff) return a.coeff < b.coeff;
    return a.constant < b.constant;
  }
};

struct FmStage {
  std::size_t var;
  std::vector<LinearForm> rows;  // rows before var was eliminated
};

// eliminate order[0], order[1], ...; returns false on a violated constant row
bool fourier_motzkin(std::vector<LinearForm> rows, const std::vector<std::size_t>& order, std::vector<FmStage>* stages,
                     const EliminationOptions& opt, std::vector<LinearForm>* rest = nullptr) {
  for (std::size_t v : order) {
    if (stages) stages->push_back(FmStage{v, rows});
    std::vector<LinearForm> lower, upper;
    std::set<LinearForm, FormLess> next;
    for (const auto& r : rows) {
      if (r.coeff[v] > 0)
        lower.push_back(r);
      else if (r.coeff[v] < 0)
        upper.push_back(r);
      else
        next.insert(r);
    }
    if (lower.size() * upper.size() > opt.max_rows) throw EliminationLimit("Fourier-Motzkin row limit exceeded");
    for (const auto& lo : lower)
      for (const auto& up : upper) next.insert(normalized(lo * (-up.coeff[v]) + up * lo.coeff[v]));
    rows.clear();
    for (const auto& r : next) {
      if (r.is_constant()) {
        if (r.constant < 0) return false;
        continue;
      }
      rows.push_back(r);
    }
    if (rows.size() > opt.max_rows) throw EliminationLimit("Fourier-Motzkin row limit exceeded");
  }
  if (rest) *rest = std::move(rows);
  return true;
}

// rows left after eliminating vars; callers only use this on feasible systems
std::vector<LinearForm> project(const std::vector<LinearForm>& rows, const std::vector<std::size_t>& vars,
                                const EliminationOptions& opt) {
  std::vector<LinearForm> rest;
  fourier_motzkin(rows, vars, nullptr, opt, &rest);
  return rest;
}

// [lo, hi] for a_v from rows in which every other variable is already fixed by x
std::pair<std::optional<Rational>, std::optional<Rational>> bounds_for(const std::vector<LinearForm>& rows,
                                                                        std::size_t v, const RationalVector& x,
                                                                        const std::vector<bool>& known) {
  std::optional<Rational> lo, hi;
  for (const auto& r : rows) {
    if (r.coeff[v] == 0) continue;
    Rational rest = r.constant;
    for (std::size_t k = 0; k < r.coeff.size(); ++k)
      if (k != v && r.coeff[k] != 0) {
        if (!known[k]) throw std::logic_error("back substitution order broken");
        rest += r.coeff[k] * x[k];
      }
    Rational b = -rest / r.coeff[v];
    if (r.coeff[v] > 0) {
      if (!lo || b > *lo) lo = b;
    } else if (!hi || b < *hi) {
      hi = b;
    }
  }
  return {lo, hi};
}

Rational pick(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (lo && hi) return (*lo + *hi) / 2;
  if (lo) return *lo + 1;
  if (hi) return *hi - 1;
  return 0;
}

}  // namespace

EliminationResult eliminate(const LinearConstraintSystem& sys, const EliminationOptions& opt) {
  std::size_t n = sys.nvars();
  EliminationResult res;
  res.pinned.assign(n, std::nullopt);
  EqualityReducer red(sys.equalities, n);
  if (!red.consistent()) {
    res.reason = "equalities are inconsistent";
    return res;
  }
  std::vector<bool> is_free(n, true);
  for (std::size_t k = 0; k < n; ++k) {
    LinearForm probe = red.reduce(LinearForm::variable(n, k));
    // a pivot reduces to an expression without itself
    if (probe.coeff[k] == 0) is_free[k] = false;
  }
  std::vector<LinearForm> rows;
  for (const auto& f : sys.inequalities) {
    LinearForm r = red.reduce(f);
    if (r.is_constant()) {
      if (r.constant < 0) {
        res.reason = "inequality " + format(f, sys.names) + " >= 0 is violated after substitution";
        return res;
      }
      continue;
    }
    rows.push_back(normalized(r));
  }
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < n; ++k)
    if (is_free[k]) order.push_back(k);
  if (order.size() > opt.max_free) throw EliminationLimit("too many free variables for Fourier-Motzkin");

  std::vector<FmStage> stages;
  if (!fourier_motzkin(rows, order, &stages, opt)) {
    res.reason = "Fourier-Motzkin elimination derives 0 > 0";
    return res;
  }
  res.feasible = true;
  res.reason = "feasible";

  RationalVector x(n);
  std::vector<bool> known(n, false);
  for (std::size_t k = 0; k < n; ++k)
    if (!is_free[k]) known[k] = true;  // pivots are filled in afterwards, they never occur in rows
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    auto [lo, hi] = bounds_for(it->rows, it->var, x, known);
    x[it->var] = pick(lo, hi);
    known[it->var] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!is_free[k]) x[k] = red.reduce(LinearForm::variable(n, k)).evaluate(x);
  res.point = x;

  if (!opt.detect_pinned) return res;
  std::vector<LinearForm> pins;
  for (std::size_t v : order) {
    std::vector<std::size_t> others;
    for (std::size_t k : order)
      if (k != v) others.push_back(k);
    std::vector<LinearForm> cur = project(rows, others, opt);
    auto [lo, hi] = bounds_for(cur, v, RationalVector(n), std::vector<bool>(n, true));
    if (lo && hi && *lo == *hi) {
      LinearForm pin = LinearForm::variable(n, v);
      pin.constant = -*lo;
      pins.push_back(pin);
    }
  }
  std::vector<LinearForm> eqs = sys.equalities;
  eqs.insert(eqs.end(), pins.begin(), pins.end());
  EqualityReducer full(eqs, n);
  for (std::size_t k = 0; k < n; ++k) {
    LinearForm r = full.reduce(LinearForm::variable(n, k));
    if (r.is_constant()) res.pinned[k] = r.constant;
  }
  return res;
}

}  // namespace slemmakit
