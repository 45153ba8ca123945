#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slemmakit/rational.hpp"

namespace slemmakit {

// constant + sum coeff[k] * a_k
struct LinearForm {
  RationalVector coeff;
  Rational constant;

  explicit LinearForm(std::size_t nvars = 0) : coeff(nvars) {}
  static LinearForm variable(std::size_t nvars, std::size_t k);
  static LinearForm constant_form(std::size_t nvars, const Rational& c);

  bool is_constant() const;
  Rational evaluate(const RationalVector& a) const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& s);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  bool operator==(const LinearForm& o) const { return coeff == o.coeff && constant == o.constant; }
};

std::string format(const LinearForm& f, const std::vector<std::string>& names);

struct LinearConstraintSystem {
  std::vector<std::string> names;
  std::vector<LinearForm> equalities;    // form == 0
  std::vector<LinearForm> inequalities;  // form >= 0

  explicit LinearConstraintSystem(std::vector<std::string> variable_names = {}) : names(std::move(variable_names)) {}
  std::size_t nvars() const { return names.size(); }
  void add_eq(const LinearForm& f) { equalities.push_back(f); }
  void add_ge(const LinearForm& f) { inequalities.push_back(f); }
};

class EliminationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EliminationResult {
  bool feasible = false;
  std::string reason;
  // a feasible point, chosen near the middle of each projected range
  std::optional<RationalVector> point;
  // value of a_k when the system pins it
  std::vector<std::optional<Rational>> pinned;
};

struct EliminationOptions {
  std::size_t max_free = 8;
  std::size_t max_rows = 20000;
  bool detect_pinned = true;
};

// throws EliminationLimit past the caps
EliminationResult eliminate(const LinearConstraintSystem& sys, const EliminationOptions& opt = {});

// rewrite f using the equalities only (pivot variables replaced); used to test "f is constant mod equalities"
class EqualityReducer {
 public:
  explicit EqualityReducer(const std::vector<LinearForm>& eqs, std::size_t nvars);
  bool consistent() const { return consistent_; }
  LinearForm reduce(const LinearForm& f) const;

 private:
  std::vector<std::pair<std::size_t, LinearForm>> rows_;  // pivot k, a_k + rest == 0 with rest free of pivots
  bool consistent_ = true;
};

}  // namespace slemmakit
