#include "slemmakit/upoly.hpp"

#include <stdexcept>

namespace slemmakit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }
UPoly UPoly::linear_root(const Rational& r) { return UPoly(std::vector<Rational>{-r, 1}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& UPoly::lc() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(d);
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * (1 / lc());
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Rational> out;
  for (const auto& q : c_) {
    Rational s = q * l;
    out.push_back(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  for (auto& q : out) q /= g;
  return UPoly(out);
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly::constant(*it);
  return acc;
}

UPoly UPoly::reflect() const {
  std::vector<Rational> out(c_);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return UPoly(out);
}

int UPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) c_.clear();
  for (auto& q : c_) q *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(out);
}

UPoly UPoly::operator-() const { return *this * Rational(-1); }

UPoly pow(const UPoly& p, unsigned k) {
  UPoly r = UPoly::constant(1), base = p;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = 1 / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {UPoly(q), UPoly(r)};
}

UPoly gcd(UPoly a, UPoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SquarefreeDecomposition squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  SquarefreeDecomposition out{p.lc(), {}};
  if (p.degree() == 0) return out;
  UPoly a = p.monic();
  UPoly b = a.derivative();
  UPoly g = gcd(a, b);
  UPoly c = divmod(a, g).first;
  UPoly d = divmod(b, g).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    UPoly ai = gcd(c, d);
    c = divmod(c, ai).first;
    d = divmod(d, ai).first - c.derivative();
    if (ai.degree() > 0) out.factors.push_back({ai, i});
  }
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first.primitive();
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UPoly r, basis = UPoly::constant(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    r += basis * dd[i];
    basis = basis * UPoly::linear_root(xs[i]);
  }
  return r;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  if (p.degree() <= 0) return 1;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.lc());
    if (r > m) m = r;
  }
  return 1 + m;
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p.primitive());
  UPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.primitive());
  for (;;) {
    UPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive());
  }
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.sign_at(x));
  return count_changes(s);
}

int SturmSequence::variations_at_infinity(int side) const {
  std::vector<int> s;
  for (const auto& q : chain_) {
    int v = sgn(q.lc());
    if (side < 0 && q.degree() % 2 == 1) v = -v;
    s.push_back(v);
  }
  return count_changes(s);
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

int SturmSequence::count_all() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

UPoly to_upoly(const Polynomial& p) {
  if (p.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] = v;
  }
  return UPoly(c);
}

Polynomial to_polynomial(const UPoly& p) {
  Polynomial r(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term(Exponent{static_cast<unsigned>(i)}, p.coeffs()[i]);
  return r;
}

std::string format(const UPoly& p, const std::string& var) {
  return format(to_polynomial(p), {var});
}

}  // namespace slemmakit
