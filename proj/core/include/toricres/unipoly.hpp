#pragma once

#include <utility>
#include <vector>

#include "toricres/rational.hpp"

namespace toricres {

// Dense univariate polynomial over Q.  Used only at tiny scale, for the
// one-free-atom gcd probe of complex determinants.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c);
  static UniPoly variable();

  // coefficient of t^i at index i; trailing zeros trimmed
  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }

  Rational eval(const Rational& t) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // quotient/remainder; divisor must be nonzero
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  // exact division; throws if the remainder is nonzero
  UniPoly exact_div(const UniPoly& b) const;

  UniPoly monic() const;

  static UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd

  // Lagrange interpolation through distinct sample points.
  static UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& pts);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace toricres
