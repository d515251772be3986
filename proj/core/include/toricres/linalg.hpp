#pragma once

#include <optional>
#include <vector>

#include "toricres/matrix.hpp"

namespace toricres {

// U*A*V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  // Diagonal entries of D, length min(rows, cols).
  std::vector<Integer> invariants() const;
};

SmithResult smith_normal_form(const IntMatrix& A);

// Exact determinant by fraction-free (Bareiss) elimination with deterministic
// pivoting: first nonzero entry scanning rows in ascending order.  The empty
// matrix has determinant 1.
Integer bareiss_det(const IntMatrix& M);
Rational bareiss_det(const RatMatrix& M);

struct RankProfile {
  std::vector<int> row_indices;  // in the order pivots were found
  std::vector<int> col_indices;  // ascending
  int rank = 0;
};

// Deterministic rank profile: columns are processed in ascending order and
// each pivot is the first row (in scan order) with a nonzero entry after
// elimination.  The returned rows/columns select a nonsingular rank x rank
// submatrix.  `row_order`, when given, replaces the default ascending row
// scan order (used to force preferred rows into the profile).
RankProfile rank_profile(const RatMatrix& M);
RankProfile rank_profile(const RatMatrix& M, const std::vector<int>& row_order);

int rank_of(const RatMatrix& M);

// Solves A x = b for square A; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_square(const RatMatrix& A,
                                                  const std::vector<Rational>& b);

// Basis of { x : A x = 0 }, one vector per entry.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& A);

// Feasibility of { t : A t >= rhs } by Fourier-Motzkin elimination.  Only
// intended for very small systems (cone face tests).
bool fourier_motzkin_feasible(const RatMatrix& A, const std::vector<Rational>& rhs);

}  // namespace toricres
