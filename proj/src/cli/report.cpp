#include "slemmakit/report.hpp"

#include <stdexcept>

namespace slemmakit {

Json rational_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

RationalVector vector_from_json(const Json& j) {
  RationalVector out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["reason"] = v.reason;
  out["witness"] = v.witness ? vector_json(*v.witness) : Json();
  Json ev = Json::array();
  for (const auto& [k, val] : v.evidence) ev.push_back(Json::array({k, val}));
  out["evidence"] = ev;
  return out;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == to_string(VerdictKind::Proved))
    v.kind = VerdictKind::Proved;
  else if (kind == to_string(VerdictKind::Disproved))
    v.kind = VerdictKind::Disproved;
  else if (kind == to_string(VerdictKind::Unknown))
    v.kind = VerdictKind::Unknown;
  else
    throw std::invalid_argument("unknown verdict kind: " + kind);
  v.reason = j.value("reason", "");
  if (j.contains("witness") && !j["witness"].is_null()) v.witness = vector_from_json(j["witness"]);
  if (j.contains("evidence"))
    for (const auto& e : j["evidence"]) v.note(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return v;
}

Json to_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  out["inputs"] = r.inputs;
  out["verdict"] = verdict_json(r.verdict);
  out["certificate"] = r.certificate;
  Json trace = Json::array();
  for (std::size_t i = 0; i < r.derivation_trace.size(); ++i)
    trace.push_back(Json{{"step", i + 1}, {"text", r.derivation_trace[i]}});
  out["derivation_trace"] = trace;
  out["timing_ms"] = r.timing_ms;
  out["seed"] = r.seed;
  out["version"] = r.version;
  return out;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.verdict = verdict_from_json(j.at("verdict"));
  r.certificate = j.value("certificate", Json());
  if (j.contains("derivation_trace"))
    for (const auto& s : j["derivation_trace"]) r.derivation_trace.push_back(s.at("text").get<std::string>());
  r.timing_ms = j.value("timing_ms", 0L);
  r.seed = j.value("seed", std::uint64_t{0});
  r.version = j.value("version", std::string(kVersion));
  return r;
}

int exit_code(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Proved: return 0;
    case VerdictKind::Disproved: return 2;
    case VerdictKind::Unknown: return 3;
  }
  return 1;
}

}  // namespace slemmakit
