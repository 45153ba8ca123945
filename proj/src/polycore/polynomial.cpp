#include "slemmakit/polynomial.hpp"

#include <algorithm>
#include <climits>

#include "slemmakit/upoly.hpp"

namespace slemmakit {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return lex_less(b, a);
}

bool lex_less(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (unsigned v : e) d += v;
  return d;
}

long Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t idx) {
  if (idx >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars, 0);
  e[idx] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::neg_inf();
  return Degree(total_degree(terms_.begin()->first));
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("mismatched nvars");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Rational Polynomial::evaluate(const RationalVector& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("point dimension does not match nvars");
  std::vector<std::vector<Rational>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].push_back(1);
    unsigned d = degree_in(i);
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * x[i]);
  }
  Rational sum = 0, term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) term *= powers[i][e[i]];
    sum += term;
  }
  return sum;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment) {
  std::size_t target = p.nvars();
  if (!assignment.empty()) target = assignment.begin()->second.nvars();
  for (const auto& [idx, img] : assignment) {
    if (idx >= p.nvars()) throw std::out_of_range("substitution index out of range");
    if (img.nvars() != target) throw std::invalid_argument("substitution images disagree on nvars");
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      if (i >= target) throw std::invalid_argument("kept variable missing from target ring");
      images.push_back(Polynomial::variable(target, i));
    }
  }
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    powers[i].push_back(Polynomial::constant(target, 1));
    unsigned d = p.degree_in(i);
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial r(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (e[i]) term *= powers[i][e[i]];
    r += term;
  }
  return r;
}

Polynomial extend_vars(const Polynomial& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw std::invalid_argument("cannot shrink variable count");
  Polynomial r(nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(nvars, 0);
    std::copy(e.begin(), e.end(), f.begin());
    r.add_term(f, c);
  }
  return r;
}

Polynomial permute_vars(const Polynomial& p, const std::vector<std::size_t>& new_index) {
  std::size_t n = 0;
  for (std::size_t i : new_index) n = std::max(n, i + 1);
  Polynomial r(std::max(n, p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponent f(r.nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[new_index.at(i)] += e[i];
    r.add_term(f, c);
  }
  return r;
}

Polynomial homogenize_to(const Polynomial& p, unsigned degree) {
  Polynomial r(p.nvars() + 1);
  for (const auto& [e, c] : p.terms()) {
    unsigned d = total_degree(e);
    if (d > degree) throw std::invalid_argument("target degree below polynomial degree");
    Exponent f(e);
    f.push_back(degree - d);
    r.add_term(f, c);
  }
  return r;
}

Polynomial homogenize(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  return homogenize_to(p, static_cast<unsigned>(p.degree().value()));
}

Polynomial dehomogenize(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("dehomogenize index out of range");
  Polynomial r(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) {
    Exponent f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var) f.push_back(e[i]);
    r.add_term(f, c);
  }
  return r;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(var) == 0) continue;
    Exponent f(e);
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(derivative(p, i));
  return g;
}

bool divides(const Polynomial& divisor, const Polynomial& p, Polynomial* quotient) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (divisor.nvars() != p.nvars()) throw std::invalid_argument("mismatched nvars");
  const auto& [dlead, dcoef] = *divisor.terms().begin();
  Polynomial r = p, q(p.nvars());
  while (!r.is_zero()) {
    const auto& [rlead, rcoef] = *r.terms().begin();
    Exponent m(rlead.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (rlead[i] < dlead[i]) return false;
      m[i] = rlead[i] - dlead[i];
    }
    Polynomial step = Polynomial::monomial(m, rcoef / dcoef);
    q += step;
    r -= step * divisor;
  }
  if (quotient) *quotient = q;
  return true;
}

bool Grading::in_N1() const {
  if (z.empty()) return false;
  for (long v : z)
    if (v < 0 || v > z[0]) return false;
  return true;
}

long Grading::weight(const Exponent& e) const {
  if (e.size() != z.size()) throw std::invalid_argument("grading length does not match nvars");
  long w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += z[i] * static_cast<long>(e[i]);
  return w;
}

long z_degree(const Polynomial& p, const Grading& z) {
  if (p.is_zero()) throw std::invalid_argument("z-degree of the zero polynomial");
  long best = LONG_MIN;
  for (const auto& [e, c] : p.terms()) best = std::max(best, z.weight(e));
  return best;
}

Polynomial leading_form_z(const Polynomial& p, const Grading& z) {
  long d = z_degree(p, z);
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (z.weight(e) == d) r.add_term(e, c);
  return r;
}

std::pair<Exponent, Rational> leading_term_lex(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (lex_less(best->first, it->first)) best = it;
  return *best;
}

namespace {

Rational monomial_value(const Exponent& e, const Rational& c, const RationalVector& x) {
  Rational v = c;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) v *= pow(x[i], e[i]);
  return v;
}

}  // namespace

Polynomial compose_ray(const Polynomial& p, const RationalVector& x, const Grading& z) {
  if (x.size() != p.nvars()) throw std::invalid_argument("point dimension does not match nvars");
  for (long v : z.z)
    if (v < 0) throw std::invalid_argument("negative weight: use compose_ray_laurent");
  Polynomial r(1);
  for (const auto& [e, c] : p.terms())
    r.add_term(Exponent{static_cast<unsigned>(z.weight(e))}, monomial_value(e, c, x));
  return r;
}

UniRational UniRational::make(const Polynomial& num, const Polynomial& den) {
  UPoly n = to_upoly(num), d = to_upoly(den);
  if (d.is_zero()) throw std::invalid_argument("zero denominator");
  UPoly g = gcd(n, d);
  if (!n.is_zero()) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  } else {
    d = UPoly::constant(1);
  }
  Rational lc = d.lc();
  n *= 1 / lc;
  d *= 1 / lc;
  return UniRational{to_polynomial(n), to_polynomial(d)};
}

int UniRational::degree() const {
  if (numerator.is_zero()) throw std::invalid_argument("degree of the zero fraction");
  return static_cast<int>(numerator.degree().value() - denominator.degree().value());
}

UniRational compose_ray_laurent(const Polynomial& p, const RationalVector& x, const Grading& z) {
  if (x.size() != p.nvars()) throw std::invalid_argument("point dimension does not match nvars");
  long shift = 0;
  for (const auto& [e, c] : p.terms()) shift = std::min(shift, z.weight(e));
  Polynomial num(1);
  for (const auto& [e, c] : p.terms())
    num.add_term(Exponent{static_cast<unsigned>(z.weight(e) - shift)}, monomial_value(e, c, x));
  Polynomial den = Polynomial::monomial(Exponent{static_cast<unsigned>(-shift)}, 1);
  return UniRational::make(num, den);
}

}  // namespace slemmakit
