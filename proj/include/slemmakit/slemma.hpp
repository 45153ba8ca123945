#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slemmakit/certify.hpp"
#include "slemmakit/quadform.hpp"

namespace slemmakit {

class SlaterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScalarCertificate {
  Rational t;
  Diagonalization psd_evidence;
};

// {t >= 0 : f - t g is PSD}; endpoints as algebraic numbers, nullopt = unbounded
struct FeasibleInterval {
  bool empty = true;
  bool boundary_only = false;
  std::optional<RealRoot> lower, upper;
};

enum class SlemmaOutcome { Certificate, Refutation, BoundaryOnly };
std::string to_string(SlemmaOutcome o);

struct SlemmaResult {
  SlemmaOutcome outcome = SlemmaOutcome::Refutation;
  std::optional<ScalarCertificate> certificate;
  // g(y) >= 0 > f(y); may be missing when the exact search proves infeasibility but finds no point
  std::optional<RationalVector> witness;
  FeasibleInterval feasible;
  std::vector<std::string> trace;
};

SlemmaResult homogeneous_slemma(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                                const SamplingConfig& cfg = {});
SlemmaResult affine_slemma(const Polynomial& f, const Polynomial& g, const RationalVector& slater,
                           const SamplingConfig& cfg = {});

// f - t g >= 0 everywhere, for f, g of degree <= 2
bool verify_scalar_certificate(const Polynomial& f, const Polynomial& g, const Rational& t);

std::optional<RationalVector> find_slater_point(const Polynomial& g, const SamplingConfig& cfg = {});

Verdict no_constant_multiplier(const Polynomial& f, const Polynomial& g);

}  // namespace slemmakit
