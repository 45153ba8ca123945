#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "slemmakit/certify.hpp"

namespace slemmakit {

// candidate points generated for one stream index; empty when nothing to test
using CandidateFn = std::function<std::vector<RationalVector>(std::size_t index)>;
using PointTest = std::function<bool(const RationalVector&)>;

struct SampleHit {
  std::size_t index = 0;
  RationalVector point;
};

// first index (in stream order) with a candidate passing test
std::optional<SampleHit> first_hit_serial(std::size_t count, const CandidateFn& gen, const PointTest& test);
std::optional<SampleHit> first_hit_parallel(std::size_t count, const CandidateFn& gen, const PointTest& test,
                                            int threads = 0);

// deterministic point for (seed, index); box doubles every budget/8 indices
RationalVector sample_point(std::uint64_t seed, std::size_t index, std::size_t nvars, const SamplingConfig& cfg);

// candidates for the inclusion falsifier: grid point, or roots of g along a random line
std::vector<RationalVector> inclusion_candidates(const Polynomial& g, std::size_t index, const SamplingConfig& cfg);

std::optional<SampleHit> falsify_inclusion(const Polynomial& g, const Polynomial& f, const SamplingConfig& cfg);

// honours SLEMMA_KIT_THREADS
int worker_count(int requested);

}  // namespace slemmakit
