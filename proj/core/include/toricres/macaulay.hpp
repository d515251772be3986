#pragma once

#include <vector>

#include "toricres/delta.hpp"
#include "toricres/fan.hpp"

namespace toricres {

struct RowTag {
  int equation = -1;     // -1 for the delta row
  Exponent multiplier;   // monomial a with x^a * F_equation; empty for delta
  bool is_delta = false;

  friend bool operator==(const RowTag& a, const RowTag& b) {
    return a.equation == b.equation && a.multiplier == b.multiplier && a.is_delta == b.is_delta;
  }
};

// Matrix of the map (G_0, ..., G_n, c) -> sum G_i F_i + c * Delta in the
// monomial bases.  Rows are tagged (i, a) for a in the basis of S_{rho-a_i},
// i ascending and a in canonical order, with the delta row last.  Columns are
// the canonical basis of S_rho.
class MacaulayMatrix {
 public:
  MacaulayMatrix(std::vector<RowTag> row_tags, std::vector<Exponent> col_monomials,
                 std::vector<CoeffPoly> entries, CoxPolynomial delta);

  int rows() const { return static_cast<int>(row_tags_.size()); }
  int cols() const { return static_cast<int>(col_monomials_.size()); }
  const CoeffPoly& entry(int i, int j) const;
  const std::vector<RowTag>& row_tags() const { return row_tags_; }
  const std::vector<Exponent>& col_monomials() const { return col_monomials_; }
  const CoxPolynomial& delta() const { return delta_; }

  int delta_row() const { return rows() - 1; }
  // -1 when absent
  int col_index(const Exponent& m) const;
  int row_index(const RowTag& tag) const;

  RatMatrix specialize(const AtomAssignment& values) const;

 private:
  std::vector<RowTag> row_tags_;
  std::vector<Exponent> col_monomials_;
  std::vector<CoeffPoly> entries_;  // row-major
  CoxPolynomial delta_;
};

MacaulayMatrix assemble_matrix(const Fan& fan, const std::vector<CoxPolynomial>& F,
                               const std::vector<std::vector<Integer>>& degrees,
                               const Flag& flag);

// A square maximal nonsingular submatrix of the specialized Macaulay matrix.
// All columns are kept; the delta row is always a member and is stored last,
// remaining rows keep their canonical order.
struct SelectedMinor {
  const MacaulayMatrix* parent = nullptr;
  std::vector<int> rows;  // indices into parent's rows; delta row last
  AtomAssignment spec;
  RatMatrix matrix;       // rows in `rows` order, all columns
  Rational det;           // nonzero
};

// Deterministic greedy selection: the delta row first, then the F rows in
// canonical order, keeping each row that increases the rank.  Throws
// DegenerateError when the specialized matrix does not reach full column
// rank ("non-generic specialization; resultant may vanish").
SelectedMinor select_minor(const MacaulayMatrix& M, const AtomAssignment& spec);

// Same, but F rows are tried in the order given by `row_preference` (indices
// into M's rows; the delta row is always forced in).
SelectedMinor select_minor(const MacaulayMatrix& M, const AtomAssignment& spec,
                           const std::vector<int>& row_preference);

// Uses exactly the given rows (which must include the delta row and form a
// nonsingular square matrix with all columns).
SelectedMinor select_minor_forced(const MacaulayMatrix& M, const AtomAssignment& spec,
                                  const std::vector<int>& forced_rows);

// Residue of the basis monomial h: cofactor-signed det(M~_h) / det(M~), where
// M~_h drops the delta row and the column of h.  Normalized so that the
// residue of Delta itself is +1.
Rational residue_monomial(const SelectedMinor& minor, const Exponent& h);

// Residue of an arbitrary polynomial of critical degree with constant
// coefficients: det of the minor with the delta row replaced by the
// coefficient vector of P, over det(M~).
Rational residue_poly(const SelectedMinor& minor, const CoxPolynomial& P);

// Residues of every column monomial at once (one linear solve).
std::vector<Rational> residue_basis(const SelectedMinor& minor);

}  // namespace toricres
