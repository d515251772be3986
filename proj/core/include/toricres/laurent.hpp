#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricres/fan.hpp"

namespace toricres {

using LaurentExp = std::vector<int>;  // exponents may be negative

// Sparse Laurent polynomial with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}
  static LaurentPoly monomial(const LaurentExp& e, const Rational& c = Rational(1));

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<LaurentExp, Rational>& terms() const { return terms_; }

  void add_term(const LaurentExp& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  // t_k * d/dt_k, the logarithmic derivative (keeps supports unchanged)
  LaurentPoly log_derivative(int k) const;
  LaurentPoly derivative(int k) const;

  // point coordinates must be nonzero when negative exponents occur
  Rational evaluate(const std::vector<Rational>& point) const;

  int max_total_degree() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  int num_vars_ = 0;
  std::map<LaurentExp, Rational> terms_;
};

struct LaurentSystem {
  int n = 0;
  std::vector<LaurentPoly> f;  // exactly n polynomials
};

// det(t_k df_j/dt_k); expanded symbolically, n <= 4 enforced.
LaurentPoly toric_jacobian(const LaurentSystem& sys);

// det(df_j/dt_k); the classical affine Jacobian.
LaurentPoly affine_jacobian(const LaurentSystem& sys);

// sum over the supplied roots of q(xi)/J^T(xi).  The roots must be exactly
// the common zeros in the torus and simple; simplicity is checked through
// J^T(xi) != 0, membership through f_j(xi) = 0.
Rational global_residue_direct(const LaurentSystem& sys, const LaurentPoly& q,
                               const std::vector<std::vector<Rational>>& roots);

struct HomogenizeRecipe {
  enum class Kind { Macaulay, Power } kind = Kind::Macaulay;
  int f0_power = 1;                // F_0 = x_0^{f0_power} (Power recipe)
  std::optional<Exponent> g;       // user-supplied G (Power recipe)
};

struct HomogenizedSystem {
  Fan fan;                                    // P^n with rays (-1,..,-1), e_1, ..., e_n
  std::vector<CoxPolynomial> F;               // F_0 = x_0^k, then the homogenized f_i
  std::vector<std::vector<Integer>> degrees;  // degree representatives
  Exponent G;                                 // monomial of critical degree
};

// Dense homogenization: polynomial supports only, F_i of total degree d_i.
// The Macaulay recipe takes F_0 = x_0 and G = x_1^{d_1-1} ... x_n^{d_n-1};
// the Power recipe takes F_0 = x_0^k and a user-supplied G.  Checks that
// deg G equals the critical degree.
HomogenizedSystem homogenize_dense(const LaurentSystem& sys, const HomogenizeRecipe& recipe);

// Global residue of t_1^{d_1} ... t_n^{d_n} (dt/t form) through the toric
// quotient formula on P^n: the residue of the Macaulay monomial.
Rational macaulay_global_residue(const LaurentSystem& sys);

}  // namespace toricres
