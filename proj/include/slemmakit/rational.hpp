#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace slemmakit {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

// "num/den", or just "num" for integers
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

// accepts "p", "-p", "p/q"
Rational parse_rational(const std::string& text);
RationalVector parse_rational_list(const std::string& text);

inline int sign(const Rational& q) { return sgn(q); }
Rational pow(const Rational& base, unsigned exp);
Rational floor_q(const Rational& q);

}  // namespace slemmakit
