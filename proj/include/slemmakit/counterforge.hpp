#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slemmakit/certify.hpp"
#include "slemmakit/linsys.hpp"

namespace slemmakit {

struct NamedInstance {
  std::string name;
  Polynomial f{1}, g{1};
  std::string provenance;
  std::vector<std::string> var_names;  // empty means x1..xn
};

std::vector<NamedInstance> catalog();
// throws std::out_of_range on an unknown name
NamedInstance lookup(const std::string& name);

// coordinate i of the curve as a polynomial in one variable s
using RestrictionCurve = std::vector<Polynomial>;
// (s,0,1), (0,s,1), (1,0,s), (0,1,s), (s,1,0), (1,s,0)
std::vector<RestrictionCurve> default_restriction_curves();
std::string format(const RestrictionCurve& c);

// unknowns a1..a6 multiply x1^2, x2^2, x1x2, x1x3, x2x3, x3^2
std::vector<Polynomial> quadratic_multiplier_basis();
Polynomial multiplier_from(const RationalVector& a);

struct RefuteOptions {
  std::size_t max_cuts = 400;
  std::size_t planes_per_search = 96;
  std::uint64_t seed = 1;
};

struct QuadraticRefutation {
  Verdict verdict;
  LinearConstraintSystem system;
  std::vector<std::string> trace;
  // a_k fixed by the restriction phase
  std::vector<std::optional<Rational>> pinned;
  std::optional<Polynomial> candidate, residual;
  std::size_t cuts = 0;
};

// Proved: no nonnegative quadratic form t with f - t g >= 0 exists; every constraint used is necessary
QuadraticRefutation refute_quadratic_multiplier(const Polynomial& f, const Polynomial& g,
                                                std::vector<RestrictionCurve> curves = {},
                                                const RefuteOptions& opt = {});

// a point y with p(y) < 0 for a ternary form p: small integer grid, then random planes through 0
std::optional<RationalVector> form_negativity_witness(const Polynomial& p, std::size_t planes = 96,
                                                      std::uint64_t seed = 1);

struct EvenDegreeCheck {
  Verdict verdict;
  bool beta_argument_applies = false;
  std::optional<Rational> beta;
  std::vector<std::string> steps;
};

// concrete t: f - t g -> -oo along (l, beta l, 1), or t(x1,x2,0) = 0 and f(x1,x2,0) takes a negative value
EvenDegreeCheck refute_even_degree_multiplier(const Polynomial& f, const Polynomial& g, const Polynomial& t);
// the universal argument for every nonnegative form t of even degree n, as checked steps
EvenDegreeCheck even_degree_argument(const Polynomial& f, const Polynomial& g, unsigned n);

struct BlowupStep {
  unsigned exceptional_mult = 0;
  Polynomial birational{2};
};

// p(x1, x1 z) = x1^m p'(x1, z), x1 does not divide p'
BlowupStep blowup_step(const Polynomial& p);

struct TowerLevel {
  unsigned index = 0;
  Polynomial f_poly{2}, g_poly{2};
  Polynomial birational_f{2}, birational_g{2};
  unsigned exceptional_mult_f = 0, exceptional_mult_g = 0;
  Polynomial stated_f{2}, stated_g{2};
  bool f_matches_stated = false, g_matches_stated = false;
  // f_poly equals f(x1, x1^i z) (resp. g)
  bool total_transform_ok = false;
};

// closed forms as stated for level i (level 1 has its own)
Polynomial stated_f_closed_form(unsigned i);
Polynomial stated_g_closed_form(unsigned i);

std::vector<TowerLevel> tower(unsigned levels);

// d <= 6: d - 2; d > 6: d - (d - 6)/2 - 2
long nu(long d);
bool blonk_degree_ok(long d);
NamedInstance blonk_instance(long d);

// f + eps x3^4, g + eps x3^2
NamedInstance perturb(const Polynomial& f, const Polynomial& g, const Rational& eps);

struct EpsilonSearch {
  Rational epsilon;
  NamedInstance instance;
  Verdict inclusion;
  QuadraticRefutation refutation;
  std::vector<std::string> log;
};

// eps = 1/2, 1/4, ...; throws std::runtime_error when the scan runs out
EpsilonSearch find_working_epsilon(const Polynomial& f, const Polynomial& g, unsigned max_halvings = 10,
                                   const RefuteOptions& opt = {});

struct RemainderTriple {
  Polynomial r1{2}, r2{2}, r3{2};
};

struct NongeomReport {
  Verdict verdict;
  RemainderTriple triple;
  Polynomial stated_r1{2};
  bool r1_matches_stated = false;
  Rational upper_bound, lower_bound;  // a <= upper, a >= lower
  std::vector<std::string> trace;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// division of p by d in (Q[x2])[x1]; d monic in x1
std::pair<Polynomial, Polynomial> divide_in_x1(const Polynomial& p, const Polynomial& d);

NongeomReport nongeom_verify();

// Proved when p and its gradient vanish identically on the line
Verdict singular_locus_check(const Polynomial& p, const RestrictionCurve& line);

}  // namespace slemmakit
