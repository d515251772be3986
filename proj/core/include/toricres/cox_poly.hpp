#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricres/coeff_poly.hpp"

namespace toricres {

// Exponent vector in N^s, one entry per Cox variable.
using Exponent = std::vector<int>;

int exponent_degree(const Exponent& e);
bool monomial_divides(const Exponent& divisor, const Exponent& e);
Exponent exponent_sub(const Exponent& e, const Exponent& divisor);
Exponent exponent_add(const Exponent& a, const Exponent& b);
std::string monomial_to_string(const Exponent& e,
                               const std::vector<std::string>& var_names = {});

// Canonical monomial order: graded lexicographic, ascending.  Ties in total
// degree compare exponents from variable 0 upward.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial in the Cox variables x_0..x_{s-1} with CoeffPoly
// coefficients.  Rational-coefficient polynomials are the special case where
// every coefficient is constant.
class CoxPolynomial {
 public:
  CoxPolynomial() = default;
  explicit CoxPolynomial(int num_vars) : num_vars_(num_vars) {}
  static CoxPolynomial monomial(const Exponent& e, CoeffPoly c = CoeffPoly(Rational(1)));

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  using TermMap = std::map<Exponent, CoeffPoly, GrlexLess>;
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponent& e, const CoeffPoly& c);
  CoeffPoly coefficient(const Exponent& e) const;

  CoxPolynomial operator-() const;
  CoxPolynomial& operator+=(const CoxPolynomial& o);
  CoxPolynomial& operator-=(const CoxPolynomial& o);
  friend CoxPolynomial operator+(CoxPolynomial a, const CoxPolynomial& b) { return a += b; }
  friend CoxPolynomial operator-(CoxPolynomial a, const CoxPolynomial& b) { return a -= b; }
  friend CoxPolynomial operator*(const CoxPolynomial& a, const CoxPolynomial& b);
  friend bool operator==(const CoxPolynomial& a, const CoxPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  CoxPolynomial multiply_monomial(const Exponent& e) const;
  // Divides every term by the monomial; nullopt when some term is not divisible.
  std::optional<CoxPolynomial> divide_monomial(const Exponent& e) const;

  CoxPolynomial scale(const CoeffPoly& c) const;
  CoxPolynomial specialize(const AtomAssignment& values) const;
  // Evaluate at a rational point (all coefficients must be constant or covered
  // by `values`).
  Rational evaluate(const std::vector<Rational>& point, const AtomAssignment& values = {}) const;

  std::vector<Atom> atoms() const;

  std::string to_string(const std::vector<std::string>& var_names = {},
                        const AtomNamer& namer = default_atom_name) const;

 private:
  int num_vars_ = 0;
  TermMap terms_;
};

// Fully expanded determinant by cofactor expansion; refuses matrices larger
// than max_size to keep the expansion bounded.
CoxPolynomial small_symbolic_det(const std::vector<std::vector<CoxPolynomial>>& m,
                                 int max_size = 6);

}  // namespace toricres
