#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "slemmakit/certify.hpp"
#include "slemmakit/counterforge.hpp"
#include "slemmakit/quadform.hpp"
#include "slemmakit/report.hpp"
#include "slemmakit/s4solve.hpp"
#include "slemmakit/slemma.hpp"
#include "slemmakit/stability.hpp"

namespace slemmakit {

namespace {

std::vector<std::string> names_of(const Json& in) {
  if (in.contains("names")) return in["names"].get<std::vector<std::string>>();
  return {};
}

Polynomial poly(const Json& in, const char* key) {
  return parse_polynomial(in.at(key).get<std::string>(), in.at("nvars").get<std::size_t>(), names_of(in));
}

std::string fmt(const Polynomial& p, const std::vector<std::string>& names = {}) { return format(p, names); }

SamplingConfig sampling(const Json& in, const CommandOptions& opt) {
  SamplingConfig cfg;
  cfg.seed = opt.seed;
  if (in.contains("budget")) cfg.budget = in["budget"].get<std::size_t>();
  return cfg;
}

Json grading_json(const Grading& z) { return Json(z.z); }
Grading grading_from(const Json& j) { return Grading{j.get<std::vector<long>>()}; }

Json sos_json(const Sos& s, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& t : s) out.push_back(Json{{"weight", rational_json(t.weight)}, {"base", fmt(t.base, names)}});
  return out;
}

Sos sos_from(const Json& j, std::size_t n, const std::vector<std::string>& names) {
  Sos out;
  for (const auto& t : j)
    out.push_back({rational_from_json(t.at("weight")), parse_polynomial(t.at("base").get<std::string>(), n, names)});
  return out;
}

Json root_json(const std::optional<RealRoot>& r) {
  if (!r) return Json();
  return Json{{"lo", rational_json(r->lo)}, {"hi", rational_json(r->hi)}, {"exact", r->exact()},
              {"defining_poly", format(r->poly, "t")}};
}

Json bundle_json(const SignFlipBundle& b) {
  return Json{{"type", "sign_flip_bundle"},
              {"z", grading_json(b.z)},
              {"x_plus", vector_json(b.x_plus)},
              {"x_minus", vector_json(b.x_minus)},
              {"flip_set", b.flip.flip_set}};
}

SignFlipBundle bundle_from(const Json& j) {
  return SignFlipBundle{grading_from(j.at("z")), vector_from_json(j.at("x_plus")), vector_from_json(j.at("x_minus")),
                        SignFlip{j.at("flip_set").get<std::vector<std::size_t>>()}};
}

Verdict failed(std::string reason) {
  Verdict v;
  v.kind = VerdictKind::Disproved;
  v.reason = std::move(reason);
  return v;
}

void cmd_slemma(const Json& in, const CommandOptions& opt, Report& r) {
  Polynomial f = poly(in, "f"), g = poly(in, "g");
  SamplingConfig cfg = sampling(in, opt);
  RationalVector slater;
  if (in.contains("slater")) {
    slater = vector_from_json(in["slater"]);
  } else {
    auto s = find_slater_point(g, cfg);
    if (!s) throw SlaterError("no Slater point: g > 0 at none of the sampled points");
    slater = *s;
    r.derivation_trace.push_back("Slater point from sampling: " + to_string(slater));
  }
  bool affine = in.value("affine", false) || !f.is_homogeneous() || !g.is_homogeneous();
  SlemmaResult s = affine ? affine_slemma(f, g, slater, cfg) : homogeneous_slemma(f, g, slater, cfg);
  for (const auto& line : s.trace) r.derivation_trace.push_back(line);
  Json cert{{"type", "scalar"}, {"outcome", to_string(s.outcome)}, {"slater", vector_json(slater)},
            {"affine", affine}};
  cert["feasible_interval"] = Json{{"empty", s.feasible.empty},
                                   {"boundary_only", s.feasible.boundary_only},
                                   {"lower", root_json(s.feasible.lower)},
                                   {"upper", root_json(s.feasible.upper)}};
  switch (s.outcome) {
    case SlemmaOutcome::Certificate:
      cert["t"] = rational_json(s.certificate->t);
      cert["diagonal"] = vector_json(s.certificate->psd_evidence.diagonal);
      r.verdict = Verdict::proved("f - t g is PSD for t = " + to_string(s.certificate->t));
      break;
    case SlemmaOutcome::Refutation:
      if (s.witness)
        r.verdict = Verdict::disproved("S(g) is not contained in S(f)", *s.witness);
      else
        r.verdict = Verdict::unknown("no scalar multiplier; no violating point found");
      break;
    case SlemmaOutcome::BoundaryOnly:
      r.verdict = Verdict::unknown("feasible set is a single irrational point");
      break;
  }
  r.certificate = cert;
}

void cmd_no_constant(const Json& in, const CommandOptions&, Report& r) {
  Polynomial f = poly(in, "f"), g = poly(in, "g");
  r.verdict = no_constant_multiplier(f, g);
  for (const auto& [k, v] : r.verdict.evidence) r.derivation_trace.push_back(k + ": " + v);
  if (r.verdict.witness) r.certificate = Json{{"type", "ray_witness"}, {"x", vector_json(*r.verdict.witness)}};
}

void cmd_s4(const Json& in, const CommandOptions&, Report& r) {
  Polynomial f = poly(in, "f"), g = poly(in, "g");
  RationalVector slater = vector_from_json(in.at("slater"));
  MultiplierCertificate c = f.nvars() == 1 ? univariate_s4(f, g, slater) : bivariate_s4(f, g, slater);
  r.derivation_trace = c.trace;
  auto names = names_of(in);
  r.certificate = Json{{"type", "multiplier"}, {"case", c.case_label}, {"t", fmt(c.t, names)},
                       {"residual", fmt(c.residual, names)}};
  if (verify_multiplier(f, g, c))
    r.verdict = Verdict::proved("t >= 0 and f - t g >= 0, both checked exactly");
  else
    r.verdict = Verdict::unknown("certificate failed exact verification");
}

void cmd_classify(const Json& in, const CommandOptions&, Report& r) {
  Polynomial q = poly(in, "q");
  T0Classification c = classify_T0(q);
  auto names = names_of(in);
  if (c.full) {
    r.verdict = Verdict::proved("T0 is full");
    r.certificate = Json{{"type", "full"}};
    return;
  }
  Json cert{{"type", "instability_pair"}, {"z", grading_json(*c.z)}};
  if (c.pair) {
    cert["sigma0"] = sos_json(c.pair->sigma0, names);
    cert["sigma1"] = sos_json(c.pair->sigma1, names);
    cert["degree_drop"] = c.pair->degree_drop;
  }
  r.certificate = cert;
  bool ok = c.pair && verify_instability(q, *c.z, *c.pair);
  r.derivation_trace.push_back("witness grading z = " + Json(c.z->z).dump());
  r.verdict = ok ? Verdict::proved("witness grading with a verified degree drop")
                 : Verdict::unknown("witness grading without a verified instability pair");
}

void cmd_dense(const Json& in, const CommandOptions& opt, Report& r) {
  std::vector<Polynomial> gens;
  std::size_t n = in.at("nvars").get<std::size_t>();
  for (const auto& s : in.at("gens")) gens.push_back(parse_polynomial(s.get<std::string>(), n, names_of(in)));
  Grading z = grading_from(in.at("z"));
  std::size_t budget = in.contains("budget") ? in["budget"].get<std::size_t>() : 4096;
  DensityResult d = density_witness(gens, z, budget, opt.seed);
  r.verdict = d.verdict;
  if (d.point) r.certificate = Json{{"type", "density_point"}, {"z", grading_json(z)}, {"x", vector_json(d.point->x)}};
}

void cmd_no_multiplier(const Json& in, const CommandOptions& opt, Report& r) {
  Polynomial q = poly(in, "q"), p = poly(in, "p");
  std::vector<Grading> zs;
  if (in.contains("z")) zs.push_back(grading_from(in["z"]));
  std::size_t budget = in.contains("budget") ? in["budget"].get<std::size_t>() : 512;
  NoMultiplierResult m = no_multiplier_search(q, p, zs, budget, opt.seed);
  r.verdict = m.verdict;
  r.derivation_trace.push_back("gradings tried: " + std::to_string(m.gradings_tried));
  if (m.bundle) r.certificate = bundle_json(*m.bundle);
}

Json refutation_json(const QuadraticRefutation& q) {
  Json pins = Json::array();
  for (const auto& p : q.pinned) pins.push_back(p ? rational_json(*p) : Json());
  Json cert{{"type", "quadratic_refutation"}, {"pinned", pins}, {"cuts", q.cuts}};
  if (q.candidate) cert["t"] = fmt(*q.candidate);
  if (q.residual) cert["residual"] = fmt(*q.residual);
  return cert;
}

void cmd_counter_verify(const Json& in, const CommandOptions& opt, Report& r) {
  std::string name = in.at("name").get<std::string>();
  NamedInstance inst = lookup(name);
  r.inputs["f"] = fmt(inst.f, inst.var_names);
  r.inputs["g"] = fmt(inst.g, inst.var_names);
  r.derivation_trace.push_back("instance: " + inst.provenance);
  if (name == "nongeom") {
    NongeomReport rep = nongeom_verify();
    r.verdict = rep.verdict;
    for (const auto& line : rep.trace) r.derivation_trace.push_back(line);
    r.certificate = Json{{"type", "remainder_triple"},
                         {"r1", fmt(rep.triple.r1)},
                         {"r2", fmt(rep.triple.r2)},
                         {"r3", fmt(rep.triple.r3)},
                         {"stated_r1", fmt(rep.stated_r1)},
                         {"r1_matches_stated", rep.r1_matches_stated},
                         {"upper_bound", rational_json(rep.upper_bound)},
                         {"lower_bound", rational_json(rep.lower_bound)}};
  } else if (name == "quartic-no-constant") {
    cmd_no_constant(Json{{"nvars", 2}, {"f", fmt(inst.f)}, {"g", fmt(inst.g)}}, opt, r);
  } else if (name == "convexity-quartics") {
    ConvexityProbe c = joint_range_convexity_probe(inst.g, inst.f, 200, opt.seed);
    r.verdict = c.verdict;
    r.derivation_trace.push_back("pairs tested: " + std::to_string(c.pairs_tested));
    if (c.crossing)
      r.certificate = Json{{"type", "nonconvexity"},
                           {"segment_start", vector_json(*c.segment_start)},
                           {"segment_end", vector_json(*c.segment_end)},
                           {"crossing", vector_json(*c.crossing)}};
  } else if (name == "dehomog-counterexample" || name == "quintic-pair") {
    // the default grid has z1 >= z2; add the mirrored gradings too
    std::vector<Grading> zs = default_z_candidates(inst.g, inst.f);
    for (std::size_t i = 0, n = zs.size(); i < n; ++i)
      if (zs[i].z[0] != zs[i].z[1]) zs.push_back(Grading{{zs[i].z[1], zs[i].z[0]}});
    NoMultiplierResult m = no_multiplier_search(inst.g, inst.f, zs, 512, opt.seed);
    r.verdict = m.verdict;
    r.derivation_trace.push_back("gradings tried: " + std::to_string(m.gradings_tried));
    if (m.bundle) r.certificate = bundle_json(*m.bundle);
  } else {
    RefuteOptions ro;
    ro.seed = opt.seed;
    QuadraticRefutation q = refute_quadratic_multiplier(inst.f, inst.g, {}, ro);
    r.verdict = q.verdict;
    for (const auto& line : q.trace) r.derivation_trace.push_back(line);
    r.certificate = refutation_json(q);
  }
}

Json tower_level_json(const TowerLevel& l) {
  std::vector<std::string> zn{"x1", "z2"};
  return Json{{"index", l.index},
              {"f", fmt(l.f_poly, zn)},
              {"g", fmt(l.g_poly, zn)},
              {"birational_f", fmt(l.birational_f, zn)},
              {"birational_g", fmt(l.birational_g, zn)},
              {"exceptional_mult_f", l.exceptional_mult_f},
              {"exceptional_mult_g", l.exceptional_mult_g},
              {"stated_f", fmt(l.stated_f, zn)},
              {"stated_g", fmt(l.stated_g, zn)},
              {"f_matches_stated", l.f_matches_stated},
              {"g_matches_stated", l.g_matches_stated},
              {"total_transform_ok", l.total_transform_ok}};
}

void cmd_tower(const Json& in, const CommandOptions&, Report& r) {
  unsigned levels = in.at("levels").get<unsigned>();
  auto tw = tower(levels);
  Json lv = Json::array();
  bool ok = true;
  for (const auto& l : tw) {
    lv.push_back(tower_level_json(l));
    ok = ok && l.total_transform_ok;
    r.derivation_trace.push_back("level " + std::to_string(l.index) + ": deg f = " +
                                 std::to_string(l.f_poly.degree().value()) +
                                 ", deg g = " + std::to_string(l.g_poly.degree().value()));
    if (!l.f_matches_stated) r.derivation_trace.push_back("level " + std::to_string(l.index) +
                                                          ": stated f closed form differs from the iteration");
    if (!l.g_matches_stated) r.derivation_trace.push_back("level " + std::to_string(l.index) +
                                                          ": stated g closed form differs from the iteration");
  }
  r.certificate = Json{{"type", "tower"}, {"levels", lv}};
  r.verdict = ok ? Verdict::proved("every level equals the total transform of the base pair")
                 : Verdict::unknown("a level does not match its total transform");
}

void cmd_blonk(const Json& in, const CommandOptions&, Report& r) {
  long d = in.at("degree").get<long>();
  NamedInstance b = blonk_instance(d);
  r.certificate = Json{{"type", "blonk"}, {"degree", d}, {"nu", nu(d)}, {"f", fmt(b.f, b.var_names)},
                       {"g", fmt(b.g, b.var_names)}};
  r.derivation_trace.push_back(b.provenance);
  r.verdict = Verdict::proved("pair of degrees (" + std::to_string(d) + ", " + std::to_string(nu(d)) + ")");
}

void cmd_list(const Json&, const CommandOptions&, Report& r) {
  Json all = Json::array();
  for (const auto& c : catalog())
    all.push_back(Json{{"name", c.name}, {"f", fmt(c.f, c.var_names)}, {"g", fmt(c.g, c.var_names)},
                       {"provenance", c.provenance}});
  r.certificate = Json{{"type", "catalog"}, {"entries", all}};
  r.verdict = Verdict::proved(std::to_string(all.size()) + " instances");
}

void cmd_inclusion(const Json& in, const CommandOptions& opt, Report& r) {
  Polynomial f = poly(in, "f"), g = poly(in, "g");
  r.verdict = inclusion_check(g, f, sampling(in, opt));
  if (r.verdict.witness)
    r.certificate = Json{{"type", "inclusion_witness"}, {"x", vector_json(*r.verdict.witness)}};
}

using Handler = std::function<void(const Json&, const CommandOptions&, Report&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"slemma", cmd_slemma},
      {"slemma no-constant-multiplier", cmd_no_constant},
      {"s4", cmd_s4},
      {"stability classify", cmd_classify},
      {"stability dense", cmd_dense},
      {"stability no-multiplier", cmd_no_multiplier},
      {"counter list", cmd_list},
      {"counter verify", cmd_counter_verify},
      {"counter tower", cmd_tower},
      {"counter blonk", cmd_blonk},
      {"check-inclusion", cmd_inclusion},
  };
  return h;
}

}  // namespace

Report run_command(const std::string& command, const Json& inputs, const CommandOptions& opt) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw std::invalid_argument("unknown command: " + command);
  Report r;
  r.command = command;
  r.inputs = inputs;
  r.seed = opt.seed;
  auto start = std::chrono::steady_clock::now();
  it->second(inputs, opt, r);
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Verdict verify_report(const Json& j) {
  Report saved = report_from_json(j);
  const Json& cert = saved.certificate;
  std::string type = cert.is_object() ? cert.value("type", "") : "";
  const Json& in = saved.inputs;
  auto names = names_of(in);

  if (type == "scalar" && cert.contains("t")) {
    Rational t = rational_from_json(cert["t"]);
    if (t < 0 || !verify_scalar_certificate(poly(in, "f"), poly(in, "g"), t)) return failed("f - t g is not PSD");
    return Verdict::proved("scalar multiplier t = " + to_string(t) + " re-verified");
  }
  if (type == "multiplier") {
    Polynomial f = poly(in, "f"), g = poly(in, "g");
    MultiplierCertificate c;
    c.t = parse_polynomial(cert.at("t").get<std::string>(), f.nvars(), names);
    c.residual = parse_polynomial(cert.at("residual").get<std::string>(), f.nvars(), names);
    if (!verify_multiplier(f, g, c)) return failed("multiplier certificate does not verify");
    return Verdict::proved("t and f - t g re-verified nonnegative, identity exact");
  }
  if (type == "instability_pair") {
    Polynomial q = poly(in, "q");
    InstabilityPair pair{sos_from(cert.at("sigma0"), q.nvars(), names), sos_from(cert.at("sigma1"), q.nvars(), names),
                         cert.at("degree_drop").get<long>()};
    if (!verify_instability(q, grading_from(cert.at("z")), pair)) return failed("instability pair does not verify");
    return Verdict::proved("instability pair re-verified");
  }
  if (type == "sign_flip_bundle" && saved.command == "stability no-multiplier") {
    if (!verify_sign_flip_bundle(poly(in, "q"), poly(in, "p"), bundle_from(cert))) return failed("bundle does not verify");
    return Verdict::proved("sign-flip bundle re-verified");
  }
  if (type == "inclusion_witness") {
    RationalVector x = vector_from_json(cert.at("x"));
    if (poly(in, "g").evaluate(x) < 0 || poly(in, "f").evaluate(x) >= 0) return failed("witness does not violate");
    return Verdict::proved("g(x) >= 0 > f(x) re-verified");
  }
  if (type == "quadratic_refutation" && cert.contains("residual") && saved.verdict.witness) {
    Polynomial res = parse_polynomial(cert["residual"].get<std::string>(), 3);
    if (res.evaluate(*saved.verdict.witness) >= 0) return failed("residual is not negative at the witness");
  }

  // everything else: recompute from the echoed inputs and compare
  Json inputs = in;
  if (saved.command == "counter verify") {
    inputs = Json::object();
    inputs["name"] = in.at("name");
  }
  Report again = run_command(saved.command, inputs, CommandOptions{saved.seed});
  if (again.verdict.kind != saved.verdict.kind) return failed("recomputed verdict differs");
  if (again.certificate != cert) return failed("recomputed certificate differs");
  return Verdict::proved("recomputation reproduces the verdict and certificate");
}

}  // namespace slemmakit
