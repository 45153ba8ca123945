#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slemmakit/certify.hpp"
#include "slemmakit/interval.hpp"

namespace slemmakit {

// T = {(phi_1(l) x_1, ..., phi_n(l) x_n) : l >= 1, x in box}
struct TentacleSpec {
  Box box;
  std::optional<Grading> powers;       // phi_i = l^z_i
  std::vector<UniRational> fractions;  // used when powers is empty

  static TentacleSpec monomial(Box box, Grading z);
  static TentacleSpec rational(Box box, std::vector<UniRational> phi);

  std::size_t dimension() const { return box.size(); }
  // throws on degenerate boxes, zero fractions or poles in [1, oo)
  void validate() const;
  std::vector<UniRational> motion() const;
};

// z_i = deg num - deg den of phi_i
Grading tentacle_degree(const TentacleSpec& t);

// sum of weight * base^2, weights >= 0
struct SosTerm {
  Rational weight;
  Polynomial base;
};
using Sos = std::vector<SosTerm>;
Polynomial expand(const Sos& s);
std::string format(const Sos& s);

struct DensityPoint {
  RationalVector x;
};
struct InstabilityPair {
  Sos sigma0, sigma1;
  long degree_drop = 0;
};
using StabilityWitness = std::variant<DensityPoint, InstabilityPair>;

struct T0Classification {
  bool full = true;
  std::optional<Grading> z;
  std::optional<InstabilityPair> pair;
};

T0Classification classify_T0(const Polynomial& q);
// recomputes the degree drop of sigma0 + sigma1 q; z-degree of 0 counts as -1
bool verify_instability(const Polynomial& q, const Grading& z, const InstabilityPair& pair);

struct DensityResult {
  Verdict verdict;
  std::optional<DensityPoint> point;
};

DensityResult density_witness(const std::vector<Polynomial>& generators, const Grading& z, std::size_t budget = 4096,
                              std::uint64_t seed = 1);
// a box around x on which interval arithmetic certifies every leading form > 0
std::optional<Box> density_box(const std::vector<Polynomial>& generators, const Grading& z, const RationalVector& x);

struct TentacleOptions {
  int max_depth = 12;
  std::size_t max_cells = 200000;
};

// Proved: T inside {g_i >= 0 for all i}; Disproved: witness is a point of T with some g_i < 0,
// notes carry x and lambda
Verdict tentacle_in_set(const TentacleSpec& t, const std::vector<Polynomial>& gens, const TentacleOptions& opt = {});

// anchors must be lex-leading exponents of their polynomials
Grading special_grading(const std::vector<std::pair<Polynomial, Exponent>>& lead_anchors);

// does L_z(q) divide L_z(p)?
bool lz_divisibility(const Polynomial& p, const Polynomial& q, const Grading& z);

// 1-based indices
struct SignFlip {
  std::vector<std::size_t> flip_set;
  RationalVector apply(const RationalVector& x) const;
};

struct SignFlipBundle {
  Grading z;
  RationalVector x_plus, x_minus;
  SignFlip flip;
};

// Proved: L_z(q) does not divide L_z(p), q and p are asymptotically positive along the ray
// through x_plus and both negative along the flipped ray; no t >= 0 with p - t q >= 0 exists
struct NoMultiplierResult {
  Verdict verdict;
  std::optional<SignFlipBundle> bundle;
  std::size_t gradings_tried = 0;
};

// z with 1 <= z_i <= z_1 <= 6, z_1 entries first in lex order, then the special grading
std::vector<Grading> default_z_candidates(const Polynomial& q, const Polynomial& p);
NoMultiplierResult no_multiplier_search(const Polynomial& q, const Polynomial& p, std::vector<Grading> z_candidates = {},
                                 std::size_t budget = 512, std::uint64_t seed = 1);
bool verify_sign_flip_bundle(const Polynomial& q, const Polynomial& p, const SignFlipBundle& b);

}  // namespace slemmakit
