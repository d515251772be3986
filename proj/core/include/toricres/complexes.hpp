#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toricres/macaulay.hpp"
#include "toricres/unipoly.hpp"

namespace toricres {

struct ComplexComponent {
  std::vector<int> subset;       // equation subset I (ascending); empty for C^0
  std::vector<Exponent> basis;   // monomial basis of S_{rho - alpha_I}
  bool delta_slot = false;       // adjoined rank-1 summand (resultant complex)
  int offset = 0;                // position of the component inside its term
};

struct ComplexTerm {
  std::vector<ComplexComponent> components;
  int dim = 0;
};

// Koszul-style complex of the system at a rational specialization, with
// terms C^{-p} = sum over |I| = p of S_{rho - alpha_I} for p = 0 .. n+1.
// The resultant variant adjoins the rank-1 delta slot to C^{-1} (mapped by
// c -> c*Delta, with zero incoming differential); the subresultant variant
// drops the column of the distinguished monomial h from C^0.
struct ComplexSpec {
  int n = 0;
  std::vector<ComplexTerm> terms;      // index p
  std::vector<RatMatrix> diff;         // diff[p-1]: rows C^{-p}, cols C^{-p+1}
  bool resultant_variant = false;
  std::optional<Exponent> omitted_column;
};

ComplexSpec build_resultant_complex(const Fan& fan, const std::vector<CoxPolynomial>& F,
                                    const std::vector<std::vector<Integer>>& degrees,
                                    const Flag& flag, const AtomAssignment& spec);

ComplexSpec build_subresultant_complex(const Fan& fan, const std::vector<CoxPolynomial>& F,
                                       const std::vector<std::vector<Integer>>& degrees,
                                       const Exponent& h, const AtomAssignment& spec);

// Determinant of a generically exact complex: alternating product of minors
// chosen deterministically from the last differential backwards; each stage
// consumes the complement of the rows chosen at the previous one.  Throws
// DegenerateError when a required minor is singular.
Rational cayley_determinant(const ComplexSpec& cx);

// Value of c * res^l at the specialization (determinant of the resultant
// complex).
Rational resultant_power(const Fan& fan, const std::vector<CoxPolynomial>& F,
                         const std::vector<std::vector<Integer>>& degrees, const Flag& flag,
                         const AtomAssignment& spec);

// Determinant of the subresultant complex; exactly 0 when h lies in the ideal
// at the specialization (detected by a rank test).
Rational subresultant_value(const Fan& fan, const std::vector<CoxPolynomial>& F,
                            const std::vector<std::vector<Integer>>& degrees, const Exponent& h,
                            const AtomAssignment& spec);

// (residue via the determinant quotient, subresultant/resultant-power).  The
// two agree up to one global sign fixed per system.
std::pair<Rational, Rational> residue_cross_check(const Fan& fan,
                                                  const std::vector<CoxPolynomial>& F,
                                                  const std::vector<std::vector<Integer>>& degrees,
                                                  const Flag& flag, const Exponent& h,
                                                  const AtomAssignment& spec);

// Tiny-scale symbolic probe: gcd of the maximal minors of the last
// subresultant differential, with all atoms specialized except one.  Refuses
// matrices with more than max_cols columns or too many maximal minors.
UniPoly subresultant_minor_gcd(const Fan& fan, const std::vector<CoxPolynomial>& F,
                               const std::vector<std::vector<Integer>>& degrees, const Exponent& h,
                               const AtomAssignment& partial, const Atom& free_atom,
                               int max_cols = 8);

}  // namespace toricres
