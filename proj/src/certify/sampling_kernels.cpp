#include "slemmakit/sampling.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <random>

namespace slemmakit {

namespace {

constexpr long kGrid = 64;
constexpr std::size_t kRounds = 8;
constexpr std::size_t kBlock = 64;

std::mt19937_64 stream_rng(std::uint64_t seed, std::size_t index, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

// small integer points come first: coordinates from 0, 1, -1, 2, -2
std::optional<RationalVector> small_grid_point(std::size_t index, std::size_t nvars) {
  static const long vals[] = {0, 1, -1, 2, -2};
  std::size_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    total *= 5;
    if (total > 4096) return std::nullopt;
  }
  if (index >= total) return std::nullopt;
  RationalVector p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    p[i] = vals[index % 5];
    index /= 5;
  }
  return p;
}

}  // namespace

int worker_count(int requested) {
  int t = requested > 0 ? requested : omp_get_max_threads();
  if (const char* env = std::getenv("SLEMMA_KIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) t = std::min(t, cap);
  }
  return std::max(t, 1);
}

RationalVector sample_point(std::uint64_t seed, std::size_t index, std::size_t nvars, const SamplingConfig& cfg) {
  std::size_t per_round = std::max<std::size_t>(1, cfg.budget / kRounds);
  std::size_t round = std::min(kRounds - 1, index / per_round);
  Rational b = cfg.box * pow(Rational(2), static_cast<unsigned>(round));
  auto rng = stream_rng(seed, index, 0x5eed);
  std::uniform_int_distribution<long> dist(-kGrid, kGrid);
  RationalVector p(nvars);
  for (auto& c : p) c = b * make_rational(dist(rng), kGrid);
  return p;
}

std::vector<RationalVector> inclusion_candidates(const Polynomial& g, std::size_t index, const SamplingConfig& cfg) {
  std::size_t n = g.nvars();
  if (auto p = small_grid_point(index, n)) return {*p};
  if (index % 4 != 3 || g.degree().is_neg_inf() || g.degree().value() < 1) return {sample_point(cfg.seed, index, n, cfg)};

  RationalVector base = sample_point(cfg.seed, index, n, cfg);
  RationalVector dir = sample_point(cfg.seed ^ 0x9e3779b97f4a7c15ULL, index, n, cfg);
  if (std::all_of(dir.begin(), dir.end(), [](const Rational& c) { return c == 0; })) dir[0] = 1;
  UPoly u = restrict_to_line(g, base, dir);
  std::vector<RationalVector> out;
  if (u.degree() < 1) return {base};
  for (auto r : isolate_squarefree(squarefree_part(u))) {
    refine(r, Rational(1, 256));
    for (const Rational& s : {r.lo, r.hi}) {
      RationalVector y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = base[i] + s * dir[i];
      out.push_back(std::move(y));
      if (r.exact()) break;
    }
  }
  return out;
}

std::optional<SampleHit> first_hit_serial(std::size_t count, const CandidateFn& gen, const PointTest& test) {
  for (std::size_t i = 0; i < count; ++i)
    for (auto& y : gen(i))
      if (test(y)) return SampleHit{i, std::move(y)};
  return std::nullopt;
}

std::optional<SampleHit> first_hit_parallel(std::size_t count, const CandidateFn& gen, const PointTest& test,
                                            int threads) {
  int t = worker_count(threads);
  std::size_t block = kBlock * static_cast<std::size_t>(t);
  std::vector<std::optional<RationalVector>> found(block);
  for (std::size_t start = 0; start < count; start += block) {
    std::size_t len = std::min(block, count - start);
    std::fill(found.begin(), found.end(), std::nullopt);
#pragma omp parallel for schedule(dynamic, 4) num_threads(t)
    for (std::size_t k = 0; k < len; ++k) {
      for (auto& y : gen(start + k))
        if (test(y)) {
          found[k] = std::move(y);
          break;
        }
    }
    // lowest index wins, so the answer does not depend on t
    for (std::size_t k = 0; k < len; ++k)
      if (found[k]) return SampleHit{start + k, std::move(*found[k])};
  }
  return std::nullopt;
}

std::optional<SampleHit> falsify_inclusion(const Polynomial& g, const Polynomial& f, const SamplingConfig& cfg) {
  CandidateFn gen = [&](std::size_t i) { return inclusion_candidates(g, i, cfg); };
  PointTest test = [&](const RationalVector& y) { return g.evaluate(y) >= 0 && f.evaluate(y) < 0; };
  if (cfg.parallel) return first_hit_parallel(cfg.budget, gen, test, cfg.threads);
  return first_hit_serial(cfg.budget, gen, test);
}

}  // namespace slemmakit
