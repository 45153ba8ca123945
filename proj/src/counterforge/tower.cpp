#include <algorithm>
#include <map>
#include <stdexcept>

#include "slemmakit/counterforge.hpp"

namespace slemmakit {

namespace {

Polynomial mono(unsigned a, unsigned b, long c = 1) { return Polynomial::monomial({a, b}, c); }

Polynomial base_f() { return mono(3, 0) + mono(3, 1) + mono(0, 2); }
Polynomial base_g() { return mono(1, 0) + mono(0, 1) + mono(1, 1); }

}  // namespace

BlowupStep blowup_step(const Polynomial& p) {
  if (p.nvars() != 2) throw std::invalid_argument("blow-up expects a polynomial in two variables");
  if (p.is_zero()) throw std::invalid_argument("cannot blow up the zero polynomial");
  Polynomial q = substitute(p, {{1, mono(1, 1)}});
  BlowupStep r;
  r.exceptional_mult = q.terms().begin()->first[0];
  for (const auto& [e, c] : q.terms()) r.exceptional_mult = std::min(r.exceptional_mult, e[0]);
  for (const auto& [e, c] : q.terms()) r.birational.add_term({e[0] - r.exceptional_mult, e[1]}, c);
  return r;
}

Polynomial stated_f_closed_form(unsigned i) {
  if (i == 0) throw std::invalid_argument("levels start at 1");
  if (i == 1) return mono(0, 2) + mono(1, 0) + mono(2, 1);
  return mono(2 * (i - 2) + 1, 2) + mono(0, 0) + mono(2 + i, 1);
}

Polynomial stated_g_closed_form(unsigned i) {
  if (i == 0) throw std::invalid_argument("levels start at 1");
  return mono(0, 0) + mono(0, 1) + mono(i, 1);
}

std::vector<TowerLevel> tower(unsigned levels) {
  if (levels < 1) throw std::invalid_argument("need at least one level");
  std::vector<TowerLevel> out;
  Polynomial bf = base_f(), bg = base_g();
  unsigned mf = 0, mg = 0;
  for (unsigned i = 1; i <= levels; ++i) {
    BlowupStep sf = blowup_step(bf), sg = blowup_step(bg);
    bf = sf.birational;
    bg = sg.birational;
    mf += sf.exceptional_mult;
    mg += sg.exceptional_mult;
    TowerLevel L;
    L.index = i;
    L.birational_f = bf;
    L.birational_g = bg;
    L.exceptional_mult_f = mf;
    L.exceptional_mult_g = mg;
    L.f_poly = mono(mf, 0) * bf;
    L.g_poly = mono(mg, 0) * bg;
    L.stated_f = stated_f_closed_form(i);
    L.stated_g = stated_g_closed_form(i);
    L.f_matches_stated = L.stated_f == bf;
    L.g_matches_stated = L.stated_g == bg;
    std::map<std::size_t, Polynomial> chart{{1, mono(i, 1)}};
    L.total_transform_ok = substitute(base_f(), chart) == L.f_poly && substitute(base_g(), chart) == L.g_poly;
    out.push_back(L);
  }
  return out;
}

long nu(long d) {
  if (!blonk_degree_ok(d)) throw std::invalid_argument("degree " + std::to_string(d) + " is not covered");
  return d <= 6 ? d - 2 : d - (d - 6) / 2 - 2;
}

bool blonk_degree_ok(long d) { return d == 4 || d == 5 || d == 6 || (d >= 8 && d % 2 == 0); }

NamedInstance blonk_instance(long d) {
  long want_g = nu(d);
  NamedInstance r;
  r.var_names = {"x1", "z2"};
  if (d == 4) {
    r.f = base_f();
    r.g = base_g();
    r.name = "blonk-4";
    r.provenance = "dehomogenized ternary pair, tower level 0";
  } else {
    auto levels = tower(static_cast<unsigned>(d));
    auto it = std::find_if(levels.begin(), levels.end(),
                           [&](const TowerLevel& L) { return L.f_poly.degree().value() == d; });
    if (it == levels.end()) throw std::logic_error("no tower level reaches degree " + std::to_string(d));
    r.f = it->f_poly;
    r.g = it->g_poly;
    r.name = "blonk-" + std::to_string(d);
    r.provenance = "blow-up tower level " + std::to_string(it->index) +
                   "; no nonnegative t exists because any such t would pull back to a multiplier for the base pair";
  }
  if (r.g.degree().value() != want_g)
    throw std::logic_error("deg g = " + std::to_string(r.g.degree().value()) + " but nu(d) = " + std::to_string(want_g));
  return r;
}

}  // namespace slemmakit
