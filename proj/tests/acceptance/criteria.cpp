#include "criteria.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "slemmakit/certify.hpp"
#include "slemmakit/counterforge.hpp"
#include "slemmakit/quadform.hpp"
#include "slemmakit/report.hpp"
#include "slemmakit/s4solve.hpp"
#include "slemmakit/slemma.hpp"
#include "slemmakit/stability.hpp"

using namespace slemmakit;

namespace acceptance {

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void info(const std::string& s) { notes.push_back(s); }
};

Polynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }
Polynomial PZ(const std::string& s) { return parse_polynomial(s, 2, {"x1", "z2"}); }

bool trace_has(const std::vector<std::string>& trace, const std::string& needle, std::size_t* at = nullptr) {
  for (std::size_t i = 0; i < trace.size(); ++i)
    if (trace[i].find(needle) != std::string::npos) {
      if (at) *at = i;
      return true;
    }
  return false;
}

// sign of p(x_i * lam^z_i) at a large lam, exact
int sign_far_out(const Polynomial& p, const RationalVector& x, const std::vector<long>& z, long lam) {
  RationalVector y;
  for (std::size_t i = 0; i < x.size(); ++i) y.push_back(x[i] * pow(Rational(lam), static_cast<unsigned>(z[i])));
  return sgn(oracle::naive_eval(p, y));
}

Polynomial random_form3(std::mt19937_64& rng, unsigned deg) {
  Polynomial p(3);
  for (unsigned a = 0; a <= deg; ++a)
    for (unsigned b = 0; a + b <= deg; ++b) p.add_term({a, b, deg - a - b}, oracle::random_rational(rng, 3));
  return p;
}

Outcome intro_identity() {
  Outcome o;
  Polynomial f = P("x1^4 - x2^4", 2), g = P("x1^2 - x2^2", 2);
  o.require(f - P("2*x2^2", 2) * g == pow(P("x1^2 - x2^2", 2), 2), "f - 2 x2^2 g = (x1^2 - x2^2)^2");
  Report r = run_command("s4", Json{{"nvars", 2}, {"f", format(f)}, {"g", format(g)}, {"slater", {"1/1", "0/1"}}});
  o.require(r.verdict.is_proved(), "s4 returns a certificate");
  if (r.certificate.is_object() && r.certificate.contains("t")) {
    Polynomial t = P(r.certificate["t"].get<std::string>(), 2);
    Polynomial res = P(r.certificate["residual"].get<std::string>(), 2);
    o.require(f - t * g == res, "residual identity");
    o.require(oracle::psd_by_principal_minors(oracle::gram_naive(t)) || t.degree().value() == 0, "t >= 0");
    o.require(!oracle::grid_finds_negative(res, 8, 3), "residual has no negative grid value");
    o.require(verify_report(to_json(r)).is_proved(), "report re-verifies");
    o.info("t = " + format(t));
  }
  return o;
}

Outcome slemma_interval() {
  Outcome o;
  Polynomial f = P("2*x1^2 - x2^2", 2), g = P("x1^2 - x2^2", 2);
  Report r = run_command("slemma", Json{{"nvars", 2}, {"f", format(f)}, {"g", format(g)}, {"slater", {"1/1", "0/1"}}});
  o.require(r.verdict.is_proved(), "slemma proves");
  const Json& iv = r.certificate.at("feasible_interval");
  o.require(!iv["lower"].is_null() && iv["lower"]["exact"].get<bool>() && iv["lower"]["lo"] == "1/1", "lower = 1");
  o.require(!iv["upper"].is_null() && iv["upper"]["exact"].get<bool>() && iv["upper"]["lo"] == "2/1", "upper = 2");
  std::size_t agree = 0;
  for (int k = 0; k <= 300; ++k) {
    Rational t(k, 100);
    bool psd = oracle::psd_by_principal_minors(oracle::gram_naive(f - g * t));
    if (psd == (t >= 1 && t <= 2)) ++agree;
  }
  o.require(agree == 301, "grid of 301 PSD tests matches [1, 2]");
  o.info("interval [" + iv["lower"]["lo"].get<std::string>() + ", " + iv["upper"]["lo"].get<std::string>() + "], grid " +
         std::to_string(agree) + "/301");
  return o;
}

Outcome quartic_no_constant() {
  Outcome o;
  Polynomial f = P("x1^4 - x1^2*x2^2", 2), g = P("x1^2 - x2^2", 2);
  Report r = run_command("slemma no-constant-multiplier", Json{{"nvars", 2}, {"f", format(f)}, {"g", format(g)}});
  o.require(r.verdict.is_proved(), "no constant multiplier proved");
  o.require(r.verdict.witness.has_value(), "ray direction given");
  if (!r.verdict.witness) return o;
  RationalVector x0 = *r.verdict.witness;
  int chains = 0;
  for (const auto& [key, val] : r.verdict.evidence) {
    auto kpos = val.find("k = ");
    if (key.rfind("t=", 0) != 0 || kpos == std::string::npos) continue;
    Rational t = parse_rational(key.substr(2));
    Rational k = parse_rational(val.substr(kpos + 4, val.find(',') - kpos - 4));
    RationalVector y{k * x0[0], k * x0[1]};
    // along k x0 the ratio f/g shrinks with k, so some explicit k pushes it below t
    o.require(oracle::naive_eval(g, y) > 0, "g > 0 at k x0 for t = " + to_string(t));
    o.require(oracle::naive_eval(f, y) - t * oracle::naive_eval(g, y) < 0, "f - t g < 0 for t = " + to_string(t));
    o.require(oracle::naive_eval(f, y) / oracle::naive_eval(g, y) < t, "f/g < t at k = " + to_string(k));
    ++chains;
  }
  o.require(chains >= 3, "explicit k for several t");
  o.info("x0 = " + to_string(x0) + ", " + std::to_string(chains) + " explicit k");
  return o;
}

Outcome ternary() {
  Outcome o;
  Report r = run_command("counter verify", Json{{"name", "ternary-counterexample"}});
  o.require(r.verdict.is_proved(), "refutation proved");
  std::size_t i1 = 0, i6 = 0, i4 = 0, i5 = 0, i2 = 0, i3 = 0;
  const auto& tr = r.derivation_trace;
  bool all = trace_has(tr, "a1 = 1", &i1) && trace_has(tr, "a6 = 0", &i6) && trace_has(tr, "a4 = 0", &i4) &&
             trace_has(tr, "a5 = 0", &i5) && trace_has(tr, "a2 = 0", &i2) && trace_has(tr, "a3 = 0", &i3);
  o.require(all, "every pin appears in the trace");
  o.require(all && i1 <= i6 && i6 <= i4 && i4 <= i5 && i5 <= i2 && i2 <= i3, "pins in the documented order");
  Json pins = r.certificate.value("pinned", Json::array());
  o.require(pins == Json({"1/1", "0/1", "0/1", "0/1", "0/1", "0/1"}), "t = x1^2 pinned");
  Polynomial res = P(r.certificate.value("residual", "0"), 3);
  o.require(res == P("-x1^2*x2*x3 + x2^2*x3^2", 3), "residual -x1^2 x2 x3 + x2^2 x3^2");
  auto inst = lookup("ternary-counterexample");
  o.require(inst.f - P("x1^2", 3) * inst.g == res, "residual = f - x1^2 g");
  o.require(r.verdict.witness && oracle::naive_eval(res, *r.verdict.witness) < 0, "witness makes the residual negative");
  if (r.verdict.witness)
    o.info("witness " + to_string(*r.verdict.witness) + ", value " +
           to_string(oracle::naive_eval(res, *r.verdict.witness)));
  return o;
}

Outcome even_degree() {
  Outcome o;
  auto inst = lookup("ternary-counterexample");
  std::mt19937_64 rng(2024);
  int proved = 0;
  for (unsigned deg : {4u, 6u})
    for (int it = 0; it < 5; ++it) {
      Polynomial a = random_form3(rng, deg / 2), b = random_form3(rng, deg / 2);
      Polynomial t = a * a + b * b;
      EvenDegreeCheck c = refute_even_degree_multiplier(inst.f, inst.g, t);
      Polynomial h = inst.f - t * inst.g;
      bool ok = c.verdict.is_proved() && c.verdict.witness && oracle::naive_eval(h, *c.verdict.witness) < 0;
      if (ok && c.beta) {
        // leading coefficient of h(l, beta l, 1) in l by substitution
        Polynomial l = Polynomial::variable(1, 0);
        Polynomial hr = substitute(h, {{0, l}, {1, l * *c.beta}, {2, Polynomial::constant(1, 1)}});
        ok = !hr.is_zero() && sgn(hr.terms().begin()->second) < 0;
      }
      o.require(ok, "degree " + std::to_string(deg) + " instance " + std::to_string(it));
      proved += ok;
    }
  o.info(std::to_string(proved) + "/10 unbounded below");
  return o;
}

Outcome nongeom() {
  Outcome o;
  Report r = run_command("counter verify", Json{{"name", "nongeom"}});
  o.require(r.verdict.is_proved(), "inconsistency concluded");
  const Json& c = r.certificate;
  o.require(P(c.value("r2", "0"), 2) == P("6*x2 - 6*x1 - 18", 2), "r2");
  o.require(P(c.value("r3", "0"), 2) == P("9*x2^2 - 25*x2 + 22", 2) * Rational(1, 6), "r3");
  o.require(c.value("upper_bound", "") == "-1/2", "a <= -1/2");
  o.require(c.value("lower_bound", "") == "-10/27", "a >= -30/81");
  o.require(rational_from_json(c["upper_bound"]) < rational_from_json(c["lower_bound"]), "bounds inconsistent");
  auto inst = lookup("nongeom");
  Polynomial l2sq = pow(P("3 + x1 - x2", 2), 2);
  Polynomial r1 = P(c.value("r1", "0"), 2);
  o.require(divides(l2sq, inst.f - r1), "r1 is the remainder of f");
  o.require(c.value("r1_matches_stated", true) == false, "stated r1 flagged as different");
  o.info("r1 = " + format(r1));
  return o;
}

Outcome tower_check() {
  Outcome o;
  Report r = run_command("counter tower", Json{{"levels", 5}});
  auto tw = tower(5);
  o.require(tw[0].f_poly == PZ("x1^2") * PZ("z2^2 + x1 + z2*x1^2"), "level 1 f");
  o.require(tw[0].g_poly == PZ("x1") * PZ("1 + z2 + z2*x1"), "level 1 g");
  auto base = lookup("dehomog-counterexample");
  for (unsigned i = 2; i <= 5; ++i) {
    // iteration oracle: g(x1, x1^i z) / x1
    Polynomial chart = substitute(base.g, {{0, PZ("x1")}, {1, Polynomial::monomial({i, 1}, 1)}});
    Polynomial q;
    bool div = divides(PZ("x1"), chart, &q);
    o.require(div && q == tw[i - 1].birational_g, "iteration oracle agrees at level " + std::to_string(i));
    bool same = stated_g_closed_form(i) == q;
    o.require(same, "stated g closed form at level " + std::to_string(i) + " (stated " +
                        format(stated_g_closed_form(i), {"x1", "z2"}) + ", iteration " + format(q, {"x1", "z2"}) + ")");
  }
  for (long d : {4L, 5L, 6L, 8L, 10L}) {
    NamedInstance b = blonk_instance(d);
    bool ok = b.f.degree().value() == d && b.g.degree().value() == nu(d);
    o.require(ok, "degree table at d = " + std::to_string(d));
  }
  o.require(r.verdict.is_proved(), "total transforms consistent");
  return o;
}

Outcome classify() {
  Outcome o;
  Report full = run_command("stability classify", Json{{"nvars", 3}, {"q", "x1*x2 + x1*x3 + x2*x3"}});
  o.require(full.verdict.is_proved() && full.certificate.value("type", "") == "full", "x1x2 + x2x3 + x1x3 is Full");
  Report w = run_command("stability classify", Json{{"nvars", 2}, {"q", "-x1^2 + x1*x2"}});
  o.require(w.verdict.is_proved() && w.certificate.value("type", "") == "instability_pair", "-x1^2 + x1x2 has a witness");
  o.require(verify_report(to_json(w)).is_proved(), "instability pair re-verifies");
  if (w.certificate.contains("sigma0")) {
    Polynomial q = P("-x1^2 + x1*x2", 2);
    Grading z{w.certificate["z"].get<std::vector<long>>()};
    Polynomial s0(2), s1(2);
    for (const auto& t : w.certificate["sigma0"])
      s0 += pow(P(t["base"].get<std::string>(), 2), 2) * rational_from_json(t["weight"]);
    for (const auto& t : w.certificate["sigma1"])
      s1 += pow(P(t["base"].get<std::string>(), 2), 2) * rational_from_json(t["weight"]);
    long lhs = z_degree(s0 + s1 * q, z), rhs = std::max(z_degree(s0, z), z_degree(s1 * q, z));
    o.require(lhs < rhs, "z-degree drops");
    o.info("z = " + w.certificate["z"].dump() + ", drop " + std::to_string(rhs - lhs));
  }
  return o;
}

Outcome bundles() {
  Outcome o;
  Polynomial q = P("x1 + x2 + x1*x2^3", 2), p = P("x1^5 + x1^5*x2 + x2^2", 2);
  Report r = run_command("stability no-multiplier", Json{{"nvars", 2}, {"q", format(q)}, {"p", format(p)}});
  o.require(r.verdict.is_proved(), "quintic pair proved");
  if (r.certificate.is_object()) {
    o.require(r.certificate["x_plus"] == Json({"5/1", "5/1"}), "x+ = (5, 5)");
    o.require(r.certificate["x_minus"] == Json({"5/1", "-5/1"}), "x- = (5, -5)");
    auto z = r.certificate["z"].get<std::vector<long>>();
    RationalVector xp{5, 5}, xm{5, -5};
    o.require(sign_far_out(q, xp, z, 1000000) == 1 && sign_far_out(p, xp, z, 1000000) == 1, "+ signs at x+");
    o.require(sign_far_out(q, xm, z, 1000000) == -1 && sign_far_out(p, xm, z, 1000000) == -1, "- signs at x-");
    o.require(verify_report(to_json(r)).is_proved(), "bundle re-verifies");
  }
  Polynomial g = P("x1 + x2 + x1*x2", 2), fs = P("x2^3 + x2^3*x1 + x1^2", 2);
  Report s = run_command("stability no-multiplier", Json{{"nvars", 2}, {"q", format(g)}, {"p", format(fs)}});
  o.require(s.verdict.is_proved(), "swapped pair proved");
  if (s.certificate.is_object()) {
    auto z = s.certificate["z"].get<std::vector<long>>();
    o.require(z.size() == 2 && z[0] == 3 * z[1], "grading with z1 = 3 z2");
    RationalVector xp = vector_from_json(s.certificate["x_plus"]), xm = vector_from_json(s.certificate["x_minus"]);
    o.require(sign_far_out(g, xp, z, 1000000) == 1 && sign_far_out(fs, xp, z, 1000000) == 1, "+ signs (swapped)");
    o.require(sign_far_out(g, xm, z, 1000000) == -1 && sign_far_out(fs, xm, z, 1000000) == -1, "- signs (swapped)");
    o.info("swapped z = " + s.certificate["z"].dump());
  }
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(10);
  // (a)
  int psd_agree = 0;
  for (int it = 0; it < 500; ++it) {
    std::size_t n = 1 + rng() % 5;
    GramMatrix a = GramMatrix::zero(n);
    bool low_rank = it % 2 == 0;
    if (low_rank) {
      std::size_t k = rng() % (n + 1);
      for (std::size_t r = 0; r < k; ++r) {
        RationalVector v = oracle::random_point(rng, n, 3, 2);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) a.entries[i][j] += v[i] * v[j];
      }
      if (it % 4 == 0) a.entries[rng() % n][rng() % n] -= Rational(1, 7);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a.entries[i][j] = a.entries[j][i];
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a.entries[i][j] = a.entries[j][i] = oracle::random_rational(rng, 4, 3);
    }
    psd_agree += is_psd(a) == oracle::psd_by_principal_minors(a.entries);
  }
  o.require(psd_agree == 500, "(a) is_psd vs principal minors " + std::to_string(psd_agree) + "/500");

  // (b)
  int lz_agree = 0;
  for (int it = 0; it < 500; ++it) {
    auto a = oracle::random_poly(rng, 3, 4, 4), b = oracle::random_poly(rng, 3, 4, 4);
    if (a.is_zero()) a = P("x1", 3);
    if (b.is_zero()) b = P("x2", 3);
    Grading z{{long(1 + rng() % 4), long(1 + rng() % 4), long(1 + rng() % 4)}};
    lz_agree += leading_form_z(a * b, z) == leading_form_z(a, z) * leading_form_z(b, z);
  }
  o.require(lz_agree == 500, "(b) L_z multiplicative " + std::to_string(lz_agree) + "/500");

  // (c)
  auto lin = [&] { return P("x1", 2) * oracle::random_rational(rng, 3) + P("x2", 2) * oracle::random_rational(rng, 3); };
  auto quad = [&] {
    return P("x1^2", 2) * oracle::random_rational(rng, 3) + P("x1*x2", 2) * oracle::random_rational(rng, 3) +
           P("x2^2", 2) * oracle::random_rational(rng, 3);
  };
  int attempted = 0, solved = 0, bad = 0;
  while (attempted < 200) {
    Polynomial g = lin() * lin() + quad() * Rational(1, 4);
    RationalVector slater;
    for (int a = -3; a <= 3 && slater.empty(); ++a)
      for (int b = -3; b <= 3 && slater.empty(); ++b)
        if (g.evaluate({a, b}) > 0) slater = {a, b};
    if (slater.empty() || !negative_direction(gram_of(g))) continue;
    Polynomial m1 = lin(), m2 = lin();
    Polynomial s1 = quad(), s2 = quad();
    Polynomial f = (m1 * m1 + m2 * m2 * Rational(1, 2)) * g + s1 * s1 + s2 * s2;
    if (f.is_zero()) continue;
    ++attempted;
    try {
      MultiplierCertificate c = bivariate_s4(f, g, slater);
      bool ok = f - c.t * g == c.residual && verify_multiplier(f, g, c) && !oracle::grid_finds_negative(c.t, 5, 2) &&
                !oracle::grid_finds_negative(c.residual, 5, 2);
      ok ? ++solved : ++bad;
    } catch (const S4Error&) {
    }
  }
  o.require(bad == 0, "(c) every returned certificate verifies");
  o.require(solved * 100 >= attempted * 95, "(c) s4 round trip " + std::to_string(solved) + "/" + std::to_string(attempted));

  // (d)
  int round = 0, tried = 0;
  for (int it = 0; it < 200; ++it) {
    auto p = oracle::random_poly(rng, 3, 4, 5);
    if (p.is_zero()) continue;
    ++tried;
    Polynomial h = homogenize(p);
    RationalVector x = oracle::random_point(rng, 3), y = x;
    y.push_back(1);
    round += h.is_homogeneous() && dehomogenize(h, 3) == p && oracle::naive_eval(h, y) == oracle::naive_eval(p, x);
  }
  o.require(round == tried, "(d) homogenize round trips " + std::to_string(round) + "/" + std::to_string(tried));

  // (e)
  int convex = 0;
  for (int it = 0; it < 100; ++it) {
    Polynomial f1 = quad(), f2 = quad();
    if (f1.is_zero() && f2.is_zero()) f1 = P("x1^2", 2);
    convex += !joint_range_convexity_probe(f1, f2, 10, it).verdict.is_disproved();
  }
  o.require(convex == 100, "(e) quadratic joint ranges midpoint-consistent " + std::to_string(convex) + "/100");
  auto inst = lookup("convexity-quartics");
  ConvexityProbe qp = joint_range_convexity_probe(inst.g, inst.f, 50, 3);
  o.require(qp.verdict.is_disproved() && qp.crossing && !binary_image_contains(inst.g, inst.f, *qp.crossing) &&
                binary_image_contains(inst.g, inst.f, *qp.segment_start) &&
                binary_image_contains(inst.g, inst.f, *qp.segment_end),
            "(e) quartic pair: certified non-convexity witness");
  return o;
}

struct Criterion {
  int id;
  std::string name, tags;
  long budget_ms;
  std::function<Outcome()> body;
};

std::vector<Criterion> criteria() {
  return {
      {1, "intro-identity", "s4 identity", 1000, intro_identity},
      {2, "slemma-interval", "slemma", 1000, slemma_interval},
      {3, "quartic-no-constant-multiplier", "slemma counter", 1000, quartic_no_constant},
      {4, "ternary-counterexample", "counter counterforge", 5000, ternary},
      {5, "even-degree-refutation", "counter counterforge", 10000, even_degree},
      {6, "nongeom", "counter counterforge", 2000, nongeom},
      {7, "blowup-tower", "counter counterforge tower", 5000, tower_check},
      {8, "stability-classification", "stability", 1000, classify},
      {9, "sign-flip-bundles", "stability", 10000, bundles},
      {10, "property-suites", "properties quadform polycore s4 certify", 60000, properties},
  };
}

}  // namespace

std::vector<CriterionResult> run(const std::string& filter) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!filter.empty() && c.name.find(filter) == std::string::npos && c.tags.find(filter) == std::string::npos &&
        filter != std::to_string(c.id))
      continue;
    CriterionResult r{c.id, c.name, false, "", 0, c.budget_ms};
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (r.ms > c.budget_ms) o.require(false, "runtime " + std::to_string(r.ms) + " ms over " + std::to_string(c.budget_ms));
    r.pass = o.pass;
    std::ostringstream d;
    for (std::size_t i = 0; i < o.notes.size(); ++i) d << (i ? "; " : "") << o.notes[i];
    r.detail = d.str();
    out.push_back(r);
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.ms << " ms)";
  if (!r.detail.empty()) s << "  " << r.detail;
  return s.str();
}

}  // namespace acceptance
