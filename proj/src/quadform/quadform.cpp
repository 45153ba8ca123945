#include "slemmakit/quadform.hpp"

#include <stdexcept>

namespace slemmakit {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return a;
  Matrix t(a[0].size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return a;
  if (a[0].size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.size(), RationalVector(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix inverse(const Matrix& a) {
  std::size_t n = a.size();
  Matrix m = a, inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RationalVector mat_vec(const Matrix& a, const RationalVector& x) {
  RationalVector y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

GramMatrix GramMatrix::zero(std::size_t n) { return GramMatrix{n, Matrix(n, RationalVector(n, 0))}; }

GramMatrix GramMatrix::outer(const RationalVector& x) {
  GramMatrix g = zero(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) g.entries[i][j] = x[i] * x[j];
  return g;
}

GramMatrix GramMatrix::operator-(const GramMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("dimension mismatch");
  GramMatrix r = *this;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.entries[i][j] -= o.entries[i][j];
  return r;
}

GramMatrix GramMatrix::operator*(const Rational& s) const {
  GramMatrix r = *this;
  for (auto& row : r.entries)
    for (auto& v : row) v *= s;
  return r;
}

GramMatrix GramMatrix::congruent(const Matrix& s) const {
  return GramMatrix{s.empty() ? 0 : s[0].size(), multiply(multiply(transpose(s), entries), s)};
}

bool is_quadratic_form(const Polynomial& q) {
  for (const auto& [e, c] : q.terms())
    if (total_degree(e) != 2) return false;
  return true;
}

GramMatrix gram_of(const Polynomial& q) {
  if (!is_quadratic_form(q)) throw std::invalid_argument("not a quadratic form: " + format(q));
  GramMatrix g = GramMatrix::zero(q.nvars());
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g.entries[idx[0]][idx[0]] = c;
    } else {
      g.entries[idx[0]][idx[1]] = c / 2;
      g.entries[idx[1]][idx[0]] = c / 2;
    }
  }
  return g;
}

Polynomial form_of(const GramMatrix& a) {
  Polynomial p(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) {
      Exponent e(a.n, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, a.entries[i][j]);
    }
  return p;
}

bool is_psd(const GramMatrix& a) {
  Matrix m = a.entries;
  std::size_t n = a.n;
  std::vector<bool> active(n, true);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (m[i][i] < 0) return false;
      if (piv == n || abs(m[i][i]) > abs(m[piv][piv])) piv = i;
    }
    if (piv == n) break;
    if (m[piv][piv] == 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (active[i] && active[j] && m[i][j] != 0) return false;
      return true;
    }
    active[piv] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || m[i][piv] == 0) continue;
      Rational f = m[i][piv] / m[piv][piv];
      for (std::size_t j = 0; j < n; ++j)
        if (active[j]) m[i][j] -= f * m[piv][j];
    }
  }
  return true;
}

Diagonalization diagonalize(const GramMatrix& a) {
  std::size_t n = a.n;
  Matrix m = a.entries, s = identity_matrix(n);
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    for (auto& row : m) std::swap(row[i], row[j]);
    for (auto& row : s) std::swap(row[i], row[j]);
  };
  // e_i <- e_i + f * e_j
  auto add_basis = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t k = 0; k < n; ++k) m[i][k] += f * m[j][k];
    for (std::size_t k = 0; k < n; ++k) m[k][i] += f * m[k][j];
    for (std::size_t k = 0; k < n; ++k) s[k][i] += f * s[k][j];
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(m[i][i]) > abs(m[piv][piv])) piv = i;
    if (m[piv][piv] == 0) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      add_basis(pi, pj, 1);
      piv = pi;
    }
    swap_basis(piv, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      add_basis(r, k, -m[r][k] / m[k][k]);
    }
  }
  Diagonalization d{s, {}};
  for (std::size_t i = 0; i < n; ++i) d.diagonal.push_back(m[i][i]);
  return d;
}

Signature signature(const GramMatrix& a) {
  Signature sig;
  for (const auto& d : diagonalize(a).diagonal) {
    if (d > 0) ++sig.n_pos;
    else if (d < 0) ++sig.n_neg;
    else ++sig.n_zero;
  }
  return sig;
}

std::size_t rank(const GramMatrix& a) {
  Signature s = signature(a);
  return s.n_pos + s.n_neg;
}

std::vector<RationalVector> kernel(const GramMatrix& a) {
  Diagonalization d = diagonalize(a);
  std::vector<RationalVector> basis;
  for (std::size_t k = 0; k < a.n; ++k) {
    if (d.diagonal[k] != 0) continue;
    RationalVector v;
    for (std::size_t i = 0; i < a.n; ++i) v.push_back(d.congruence[i][k]);
    basis.push_back(v);
  }
  return basis;
}

std::optional<RationalVector> negative_direction(const GramMatrix& a) {
  Diagonalization d = diagonalize(a);
  for (std::size_t k = 0; k < a.n; ++k) {
    if (d.diagonal[k] >= 0) continue;
    RationalVector v;
    for (std::size_t i = 0; i < a.n; ++i) v.push_back(d.congruence[i][k]);
    return v;
  }
  return std::nullopt;
}

std::vector<RankOneTerm> rank_one_decomposition(const GramMatrix& a) {
  if (!is_psd(a)) throw std::invalid_argument("rank-one decomposition needs a PSD matrix");
  Diagonalization d = diagonalize(a);
  Matrix sinv = inverse(d.congruence);
  std::vector<RankOneTerm> out;
  for (std::size_t k = 0; k < a.n; ++k) {
    if (d.diagonal[k] == 0) continue;
    RationalVector v = sinv[k];
    // rescale to a primitive integer vector with positive leading entry
    Integer l = 1, g = 0;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& q : v) {
      Rational s = q * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    Rational c = Rational(l) / Rational(g);
    for (const auto& q : v)
      if (q != 0) {
        if (q < 0) c = -c;
        break;
      }
    for (auto& q : v) q *= c;
    out.push_back({d.diagonal[k] / (c * c), v});
  }
  return out;
}

Rational trace_pair(const GramMatrix& a, const GramMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  Rational t = 0;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) t += a.entries[i][j] * b.entries[j][i];
  return t;
}

Polynomial diagonal_part(const Polynomial& q) {
  if (!is_quadratic_form(q)) throw std::invalid_argument("not a quadratic form: " + format(q));
  Polynomial d(q.nvars());
  for (const auto& [e, c] : q.terms())
    for (unsigned v : e)
      if (v == 2) d.add_term(e, c);
  return d;
}

Rational determinant(const Matrix& a) {
  std::size_t n = a.size();
  Matrix m = a;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

}  // namespace slemmakit
