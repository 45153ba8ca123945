#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "slemmakit/slemma.hpp"

namespace slemmakit {

class S4Error : public std::runtime_error {
 public:
  enum class Kind { Precondition, InclusionFails, ShapeViolation, PrecisionCeiling };
  S4Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(S4Error::Kind k);

struct MultiplierCertificate {
  Polynomial t{1};
  Polynomial residual{1};
  Verdict t_evidence;
  Verdict residual_evidence;
  std::string case_label;
  std::vector<std::string> trace;
};

struct S4Options {
  std::vector<unsigned> precision_bits{32, 64, 128, 256};
};

MultiplierCertificate univariate_s4(const Polynomial& p, const Polynomial& q, const RationalVector& slater,
                                   const S4Options& opt = {});
MultiplierCertificate bivariate_s4(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                                  const S4Options& opt = {});

// Proved: a Slater point exists (returned as witness); Disproved: g <= 0 everywhere
Verdict nonpositive_g_guard(const Polynomial& f, const Polynomial& g);

// f = t g + residual, t >= 0 and residual >= 0, all checked exactly
bool verify_multiplier(const Polynomial& f, const Polynomial& g, const MultiplierCertificate& c);

}  // namespace slemmakit
