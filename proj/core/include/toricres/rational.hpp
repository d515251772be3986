#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace toricres {

// Exact arithmetic throughout: arbitrary-precision integers and canonical
// rationals (denominator > 0, gcd(|num|, den) = 1).  GMP keeps mpq_class
// canonical across arithmetic; the constructors below canonicalize raw input.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q"; whitespace is not allowed.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Seeded generator for random coefficient specializations.  Numerators are
// drawn uniformly from [-10000, 10000], denominators from [1, 100].  The
// draw is implemented directly on top of mt19937_64 so that a seed produces
// the same stream on every platform.
class SpecRng {
 public:
  explicit SpecRng(std::uint64_t seed) : eng_(seed) {}

  Rational draw();
  Rational draw_nonzero();
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace toricres
