#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slemmakit/rational.hpp"

namespace slemmakit {

enum class VerdictKind { Proved, Disproved, Unknown };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;
  std::optional<RationalVector> witness;
  // ordered key/value evidence, rendered verbatim into reports
  std::vector<std::pair<std::string, std::string>> evidence;

  static Verdict proved(std::string reason) { return {VerdictKind::Proved, std::move(reason), {}, {}}; }
  static Verdict disproved(std::string reason, RationalVector witness) {
    return {VerdictKind::Disproved, std::move(reason), std::move(witness), {}};
  }
  static Verdict unknown(std::string reason) { return {VerdictKind::Unknown, std::move(reason), {}, {}}; }

  bool is_proved() const { return kind == VerdictKind::Proved; }
  bool is_disproved() const { return kind == VerdictKind::Disproved; }
  bool is_unknown() const { return kind == VerdictKind::Unknown; }

  Verdict& note(std::string key, std::string value) {
    evidence.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

}  // namespace slemmakit
