#include "toricres/delta.hpp"

#include "toricres/errors.hpp"

namespace toricres {

std::vector<CoxPolynomial> decompose(const CoxPolynomial& F, const std::vector<Exponent>& z) {
  std::vector<CoxPolynomial> parts(z.size(), CoxPolynomial(F.num_vars()));
  for (const auto& [e, c] : F.terms()) {
    bool assigned = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (monomial_divides(z[i], e)) {
        parts[i].add_term(exponent_sub(e, z[i]), c);
        assigned = true;
        break;
      }
    }
    if (!assigned)
      throw ValidationError("monomial " + monomial_to_string(e) +
                            " is divisible by no z_i: degree not ample or invalid flag");
  }
  return parts;
}

CoxPolynomial delta_element(const Fan& fan, const std::vector<CoxPolynomial>& F,
                            const std::vector<std::vector<Integer>>& degrees, const Flag& flag) {
  const int n = fan.dim();
  if (static_cast<int>(F.size()) != n + 1)
    throw ValidationError("delta element needs exactly dim+1 polynomials");
  std::vector<Exponent> z = fan.flag_z_monomials(flag);

  // Rows follow the equations, columns the z components, so the determinant
  // matches det(A_ij) with F_j = sum_i A_ij z_i.
  std::vector<std::vector<CoxPolynomial>> matrix;
  matrix.reserve(F.size());
  for (const auto& f : F) matrix.push_back(decompose(f, z));

  CoxPolynomial delta = small_symbolic_det(matrix, n + 1);

  DivisorClass rho = critical_degree(fan, degrees);
  for (const auto& [e, c] : delta.terms()) {
    if (!(fan.degree_of_monomial(e) == rho))
      throw Error("internal error: delta element is not homogeneous of the critical degree");
  }
  return delta;
}

}  // namespace toricres
