#pragma once

#include <vector>

#include "toricres/fan.hpp"

namespace toricres {

// Writes F as sum A_i * z_i.  Each monomial of F goes to the smallest index i
// such that z_i divides it; throws when some monomial is divisible by no z_i
// (degree not ample or invalid flag).
std::vector<CoxPolynomial> decompose(const CoxPolynomial& F, const std::vector<Exponent>& z);

// The element of critical degree with residue +-1: determinant of the
// decomposition matrix (rows = equations, columns = z components).  Checks
// that the result is homogeneous of the critical degree.
CoxPolynomial delta_element(const Fan& fan, const std::vector<CoxPolynomial>& F,
                            const std::vector<std::vector<Integer>>& degrees, const Flag& flag);

}  // namespace toricres
