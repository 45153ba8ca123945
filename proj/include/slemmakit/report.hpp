#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slemmakit/polynomial.hpp"
#include "slemmakit/verdict.hpp"

namespace slemmakit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// field order in to_json: command, inputs, verdict, certificate, derivation_trace, timing_ms, seed, version
struct Report {
  std::string command;
  Json inputs = Json::object();
  Verdict verdict;
  Json certificate;  // null when there is none
  std::vector<std::string> derivation_trace;
  long timing_ms = 0;
  std::uint64_t seed = 0;
  std::string version = kVersion;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

// rationals are always "num/den", also for integers
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);
Json verdict_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// 0 proved, 2 disproved, 3 unknown
int exit_code(const Verdict& v);

struct CommandOptions {
  std::uint64_t seed = 0;
};

// inputs hold canonical polynomial strings plus "nvars" and optional "names";
// commands: slemma, slemma no-constant-multiplier, s4, stability classify, stability dense,
// stability no-multiplier, counter list, counter verify, counter tower, counter blonk, check-inclusion
Report run_command(const std::string& command, const Json& inputs, const CommandOptions& opt = {});

// Proved when the certificate in a saved report passes the exact checkers
Verdict verify_report(const Json& report);

}  // namespace slemmakit
