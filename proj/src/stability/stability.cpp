#include "slemmakit/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "slemmakit/quadform.hpp"
#include "slemmakit/sampling.hpp"

namespace slemmakit {

Polynomial expand(const Sos& s) {
  if (s.empty()) throw std::invalid_argument("empty sum of squares");
  Polynomial r(s.front().base.nvars());
  for (const auto& t : s) {
    if (t.weight < 0) throw std::invalid_argument("negative weight in sum of squares");
    r += t.base * t.base * t.weight;
  }
  return r;
}

std::string format(const Sos& s) {
  std::string out;
  for (const auto& t : s) {
    if (!out.empty()) out += " + ";
    out += to_string(t.weight) + "*(" + format(t.base) + ")^2";
  }
  return out.empty() ? "0" : out;
}

namespace {

long zdeg_or_minus1(const Polynomial& p, const Grading& z) { return p.is_zero() ? -1 : z_degree(p, z); }

}  // namespace

T0Classification classify_T0(const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  if (!is_quadratic_form(q)) throw std::invalid_argument("classify_T0 expects a quadratic form");
  std::size_t n = q.nvars();
  T0Classification r;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 2;
    Rational a = q.coefficient(e);
    if (a >= 0) continue;
    Grading z{std::vector<long>(n, 0)};
    z.z[i] = 1;
    Polynomial xi = Polynomial::variable(n, i);
    InstabilityPair pair;
    pair.sigma1 = {{1, xi}};
    pair.sigma0 = {{-a, xi * xi}};
    Polynomial big = expand(pair.sigma1) * q;
    pair.degree_drop = z_degree(big, z) - zdeg_or_minus1(expand(pair.sigma0) + big, z);
    r.full = false;
    r.z = z;
    r.pair = pair;
    return r;
  }
  return r;
}

bool verify_instability(const Polynomial& q, const Grading& z, const InstabilityPair& pair) {
  for (const auto* s : {&pair.sigma0, &pair.sigma1})
    for (const auto& t : *s)
      if (t.weight < 0) return false;
  Polynomial big = expand(pair.sigma1) * q;
  if (big.is_zero()) return false;
  long drop = z_degree(big, z) - zdeg_or_minus1(expand(pair.sigma0) + big, z);
  return drop > 0 && drop == pair.degree_drop;
}

namespace {

std::vector<Polynomial> leading_forms(const std::vector<Polynomial>& gens, const Grading& z) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
    out.push_back(leading_form_z(g, z));
  }
  return out;
}

RationalVector sign_pattern(std::size_t n, std::size_t bits, const Rational& scale) {
  RationalVector x(n, scale);
  for (std::size_t i = 0; i < n; ++i)
    if (bits >> i & 1) x[i] = -scale;
  return x;
}

}  // namespace

DensityResult density_witness(const std::vector<Polynomial>& generators, const Grading& z, std::size_t budget,
                              std::uint64_t seed) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  std::vector<Polynomial> lead = leading_forms(generators, z);
  std::size_t n = generators.front().nvars();
  std::size_t patterns = n < 12 ? std::size_t{1} << n : 0;
  SamplingConfig cfg;
  cfg.budget = budget;
  auto gen = [&](std::size_t idx) -> std::vector<RationalVector> {
    if (idx < patterns) return {sign_pattern(n, idx, 1)};
    return {sample_point(seed, idx, n, cfg)};
  };
  auto test = [&](const RationalVector& x) {
    for (const auto& l : lead)
      if (l.evaluate(x) <= 0) return false;
    return true;
  };
  DensityResult r;
  auto hit = first_hit_serial(std::max(budget, patterns), gen, test);
  if (!hit) {
    r.verdict = Verdict::unknown("no point with all leading forms positive in budget");
    r.verdict.note("budget", std::to_string(budget));
    return r;
  }
  r.point = DensityPoint{hit->point};
  r.verdict = Verdict::proved("leading forms are all positive at a point, so their common nonnegativity set is "
                              "Zariski dense and the quadratic module is totally stable for this grading");
  r.verdict.witness = hit->point;
  for (std::size_t i = 0; i < lead.size(); ++i)
    r.verdict.note("L_z(f" + std::to_string(i + 1) + ")", format(lead[i]) + " = " + to_string(lead[i].evaluate(hit->point)));
  return r;
}

std::optional<Box> density_box(const std::vector<Polynomial>& generators, const Grading& z, const RationalVector& x) {
  std::vector<Polynomial> lead = leading_forms(generators, z);
  Rational r(1, 2);
  for (int k = 0; k < 64; ++k, r /= 2) {
    Box b;
    for (const auto& xi : x) b.emplace_back(xi - r, xi + r);
    bool ok = true;
    for (const auto& l : lead) ok = ok && enclose(l, b).lo > 0;
    if (ok) return b;
  }
  return std::nullopt;
}

Grading special_grading(const std::vector<std::pair<Polynomial, Exponent>>& lead_anchors) {
  if (lead_anchors.empty()) throw std::invalid_argument("no anchors");
  std::size_t n = lead_anchors.front().first.nvars();
  unsigned maxdeg = 0;
  bool all_monomials = true;
  for (const auto& [p, a] : lead_anchors) {
    if (p.nvars() != n) throw std::invalid_argument("anchors live in different rings");
    if (p.is_zero() || leading_term_lex(p).first != a)
      throw std::invalid_argument("anchor is not the lex-leading exponent of " + format(p));
    all_monomials = all_monomials && p.size() == 1;
    for (const auto& [e, c] : p.terms()) maxdeg = std::max(maxdeg, total_degree(e));
  }
  Grading z{std::vector<long>(n, 1)};
  if (!all_monomials) {
    long m = 1 + maxdeg, w = 1;
    for (std::size_t i = n; i-- > 0; w *= m) z.z[i] = w;
  }
  for (const auto& [p, a] : lead_anchors)
    for (const auto& [e, c] : p.terms())
      if (e != a && z.weight(e) >= z.weight(a)) throw std::logic_error("special grading failed to separate anchors");
  return z;
}

bool lz_divisibility(const Polynomial& p, const Polynomial& q, const Grading& z) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("p and q must be nonzero");
  return divides(leading_form_z(q, z), leading_form_z(p, z));
}

RationalVector SignFlip::apply(const RationalVector& x) const {
  RationalVector y = x;
  for (std::size_t i : flip_set) {
    if (i < 1 || i > y.size()) throw std::out_of_range("flip index out of range");
    y[i - 1] = -y[i - 1];
  }
  return y;
}

std::vector<Grading> default_z_candidates(const Polynomial& q, const Polynomial& p) {
  std::size_t n = q.nvars();
  std::vector<Grading> out;
  for (long z1 = 1; z1 <= 6; ++z1) {
    std::vector<long> z(n, 1);
    z[0] = z1;
    while (true) {
      out.push_back(Grading{z});
      std::size_t i = n;
      while (i-- > 1) {
        if (z[i] < z1) {
          ++z[i];
          break;
        }
        z[i] = 1;
      }
      if (i == 0) break;
    }
  }
  Grading s = special_grading({{q, leading_term_lex(q).first}, {p, leading_term_lex(p).first}});
  if (std::none_of(out.begin(), out.end(), [&](const Grading& g) { return g.z == s.z; })) out.push_back(s);
  return out;
}

namespace {

// smaller sets first; among equal sizes the later coordinates go first
std::vector<SignFlip> all_flips(std::size_t n) {
  std::vector<SignFlip> out;
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a > b;
  });
  for (auto& s : subsets) out.push_back(SignFlip{s});
  return out;
}

bool ray_signs(const Polynomial& q, const Polynomial& p, const RationalVector& x, const Grading& z, int want) {
  return ray_asymptotic_sign(q, x, z).sign == want && ray_asymptotic_sign(p, x, z).sign == want;
}

}  // namespace

bool verify_sign_flip_bundle(const Polynomial& q, const Polynomial& p, const SignFlipBundle& b) {
  for (long v : b.z.z)
    if (v < 1) return false;
  if (!b.z.in_N1()) return false;
  for (const auto& c : b.x_plus)
    if (c == 0) return false;
  if (b.flip.flip_set.empty() || b.flip.apply(b.x_plus) != b.x_minus) return false;
  if (lz_divisibility(p, q, b.z)) return false;
  return ray_signs(q, p, b.x_plus, b.z, 1) && ray_signs(q, p, b.x_minus, b.z, -1);
}

NoMultiplierResult no_multiplier_search(const Polynomial& q, const Polynomial& p, std::vector<Grading> z_candidates,
                                        std::size_t budget, std::uint64_t seed) {
  if (q.is_zero() || p.is_zero()) throw std::invalid_argument("p and q must be nonzero");
  if (q.nvars() != p.nvars()) throw std::invalid_argument("p and q live in different rings");
  std::size_t n = q.nvars();
  if (z_candidates.empty()) z_candidates = default_z_candidates(q, p);
  std::vector<SignFlip> flips = all_flips(n);
  std::size_t patterns = n < 12 ? std::size_t{1} << n : 0;
  SamplingConfig cfg;
  cfg.budget = budget;

  NoMultiplierResult r;
  for (const auto& z : z_candidates) {
    ++r.gradings_tried;
    if (z.z.size() != n) throw std::invalid_argument("grading length does not match nvars");
    if (lz_divisibility(p, q, z)) continue;
    for (std::size_t idx = 0; idx < std::max(budget, patterns); ++idx) {
      RationalVector x = idx < patterns ? sign_pattern(n, idx, 5) : sample_point(seed, idx, n, cfg);
      if (std::any_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; })) continue;
      if (!ray_signs(q, p, x, z, 1)) continue;
      for (const auto& f : flips) {
        RationalVector y = f.apply(x);
        if (!ray_signs(q, p, y, z, -1)) continue;
        SignFlipBundle b{z, x, y, f};
        r.bundle = b;
        r.verdict = Verdict::proved("no nonnegative polynomial t with p - t q >= 0 exists (sign-flip tentacle pattern)");
        r.verdict.witness = y;
        r.verdict.note("z", to_string(RationalVector(z.z.begin(), z.z.end())));
        r.verdict.note("L_z(q)", format(leading_form_z(q, z)));
        r.verdict.note("L_z(p)", format(leading_form_z(p, z)));
        r.verdict.note("x_plus", to_string(x));
        r.verdict.note("x_minus", to_string(y));
        std::string fs;
        for (std::size_t i : f.flip_set) fs += (fs.empty() ? "" : ",") + std::to_string(i);
        r.verdict.note("flip", "{" + fs + "}");
        return r;
      }
    }
  }
  r.verdict = Verdict::unknown("no grading and sign pattern found");
  r.verdict.note("gradings_tried", std::to_string(r.gradings_tried));
  return r;
}

}  // namespace slemmakit
