#pragma once

#include <cstdint>
#include <optional>

#include "slemmakit/polynomial.hpp"
#include "slemmakit/roots.hpp"
#include "slemmakit/upoly.hpp"
#include "slemmakit/verdict.hpp"

namespace slemmakit {

Verdict univariate_nonneg(const UPoly& p);
Verdict univariate_nonneg(const Polynomial& p);
Verdict binary_form_nonneg(const Polynomial& p);

struct RaySign {
  int sign = 0;
  Rational threshold;
};
RaySign ray_asymptotic_sign(const Polynomial& p, const RationalVector& x, const Grading& z);

struct SamplingConfig {
  std::size_t budget = 20000;
  std::uint64_t seed = 1;
  Rational box = 1;
  // 0 means OpenMP default, further capped by SLEMMA_KIT_THREADS
  int threads = 0;
  bool parallel = true;
};

// is {g >= 0} contained in {f >= 0}?
Verdict inclusion_check(const Polynomial& g, const Polynomial& f, const SamplingConfig& cfg = {});
Verdict univariate_inclusion(const UPoly& g, const UPoly& f);
Verdict binary_form_inclusion(const Polynomial& g, const Polynomial& f);

struct ConvexityProbe {
  Verdict verdict;
  std::size_t pairs_tested = 0;
  std::size_t preimages_found = 0;
  // set when the verdict rests on a segment of M leaving M
  std::optional<RationalVector> segment_start, segment_end, crossing;
};

// forms of equal degree; the sampled image set is M = {(f1(x), f2(x))}
ConvexityProbe joint_range_convexity_probe(const Polynomial& f1, const Polynomial& f2,
                                           std::size_t samples = 200, std::uint64_t seed = 1);

// exact: is m in {(F1(a,b), F2(a,b))} for binary forms F1, F2?
bool binary_image_contains(const Polynomial& F1, const Polynomial& F2, const RationalVector& m);

}  // namespace slemmakit
