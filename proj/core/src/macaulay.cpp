#include "toricres/macaulay.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toricres/errors.hpp"

namespace toricres {

MacaulayMatrix::MacaulayMatrix(std::vector<RowTag> row_tags, std::vector<Exponent> col_monomials,
                               std::vector<CoeffPoly> entries, CoxPolynomial delta)
    : row_tags_(std::move(row_tags)),
      col_monomials_(std::move(col_monomials)),
      entries_(std::move(entries)),
      delta_(std::move(delta)) {}

const CoeffPoly& MacaulayMatrix::entry(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * col_monomials_.size() + static_cast<std::size_t>(j)];
}

int MacaulayMatrix::col_index(const Exponent& m) const {
  auto it = std::lower_bound(col_monomials_.begin(), col_monomials_.end(), m, GrlexLess{});
  if (it == col_monomials_.end() || *it != m) return -1;
  return static_cast<int>(it - col_monomials_.begin());
}

int MacaulayMatrix::row_index(const RowTag& tag) const {
  for (std::size_t i = 0; i < row_tags_.size(); ++i)
    if (row_tags_[i] == tag) return static_cast<int>(i);
  return -1;
}

RatMatrix MacaulayMatrix::specialize(const AtomAssignment& values) const {
  RatMatrix out(rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out(i, j) = entry(i, j).evaluate(values);
  return out;
}

MacaulayMatrix assemble_matrix(const Fan& fan, const std::vector<CoxPolynomial>& F,
                               const std::vector<std::vector<Integer>>& degrees,
                               const Flag& flag) {
  const int n = fan.dim();
  if (static_cast<int>(F.size()) != n + 1 || static_cast<int>(degrees.size()) != n + 1)
    throw ValidationError("system needs exactly dim+1 polynomials and degrees");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!fan.is_ample(degrees[i]))
      throw ValidationError("degree " + std::to_string(i) + " is not ample");
    auto basis = fan.monomial_basis(degrees[i]);
    for (const auto& [e, c] : F[i].terms())
      if (!std::binary_search(basis.begin(), basis.end(), e, GrlexLess{}))
        throw ValidationError("polynomial " + std::to_string(i) + " has monomial " +
                              monomial_to_string(e) + " outside its degree's basis");
  }

  DivisorClass rho = critical_degree(fan, degrees);
  std::vector<Exponent> cols = fan.monomial_basis(rho.representative);
  if (cols.empty()) throw ValidationError("critical degree has no monomials");
  std::map<Exponent, int, GrlexLess> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], static_cast<int>(j));

  std::vector<RowTag> tags;
  for (int i = 0; i <= n; ++i) {
    std::vector<Integer> rep(static_cast<std::size_t>(fan.num_rays()), Integer(-1));
    for (int k = 0; k < fan.num_rays(); ++k) {
      rep[static_cast<std::size_t>(k)] = -1;
      for (const auto& d : degrees) rep[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k)];
      rep[static_cast<std::size_t>(k)] -= degrees[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    for (const auto& a : fan.monomial_basis(rep)) tags.push_back(RowTag{i, a, false});
  }
  tags.push_back(RowTag{-1, Exponent{}, true});

  CoxPolynomial delta = delta_element(fan, F, degrees, flag);

  std::vector<CoeffPoly> entries(tags.size() * cols.size());
  auto at = [&](std::size_t r, std::size_t c) -> CoeffPoly& { return entries[r * cols.size() + c]; };
  for (std::size_t r = 0; r + 1 < tags.size(); ++r) {
    const RowTag& tag = tags[r];
    for (const auto& [e, c] : F[static_cast<std::size_t>(tag.equation)].terms()) {
      Exponent m = exponent_add(tag.multiplier, e);
      auto it = col_of.find(m);
      if (it == col_of.end())
        throw Error("internal error: product monomial missing from the critical basis");
      at(r, static_cast<std::size_t>(it->second)) += c;
    }
  }
  for (const auto& [e, c] : delta.terms()) {
    auto it = col_of.find(e);
    if (it == col_of.end())
      throw Error("internal error: delta monomial missing from the critical basis");
    at(tags.size() - 1, static_cast<std::size_t>(it->second)) += c;
  }
  return MacaulayMatrix(std::move(tags), std::move(cols), std::move(entries), std::move(delta));
}

namespace {

SelectedMinor finish_minor(const MacaulayMatrix& M, const AtomAssignment& spec,
                           std::vector<int> rows, RatMatrix full) {
  // Delta row stored last.
  auto dr = std::find(rows.begin(), rows.end(), M.delta_row());
  if (dr == rows.end()) throw Error("internal error: minor without the delta row");
  rows.erase(dr);
  std::sort(rows.begin(), rows.end());
  rows.push_back(M.delta_row());

  std::vector<int> all_cols(static_cast<std::size_t>(M.cols()));
  std::iota(all_cols.begin(), all_cols.end(), 0);

  SelectedMinor minor;
  minor.parent = &M;
  minor.rows = rows;
  minor.spec = spec;
  minor.matrix = full.select(rows, all_cols);
  minor.det = bareiss_det(minor.matrix);
  if (minor.det == 0)
    throw DegenerateError("non-generic specialization; resultant may vanish");
  return minor;
}

}  // namespace

SelectedMinor select_minor(const MacaulayMatrix& M, const AtomAssignment& spec) {
  std::vector<int> pref;
  pref.reserve(static_cast<std::size_t>(M.rows()));
  for (int i = 0; i + 1 < M.rows(); ++i) pref.push_back(i);
  return select_minor(M, spec, pref);
}

SelectedMinor select_minor(const MacaulayMatrix& M, const AtomAssignment& spec,
                           const std::vector<int>& row_preference) {
  RatMatrix full = M.specialize(spec);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(M.rows()));
  order.push_back(M.delta_row());
  for (int r : row_preference)
    if (r != M.delta_row()) order.push_back(r);
  RankProfile prof = rank_profile(full, order);
  if (prof.rank != M.cols())
    throw DegenerateError("non-generic specialization; resultant may vanish");
  return finish_minor(M, spec, prof.row_indices, std::move(full));
}

SelectedMinor select_minor_forced(const MacaulayMatrix& M, const AtomAssignment& spec,
                                  const std::vector<int>& forced_rows) {
  if (static_cast<int>(forced_rows.size()) != M.cols())
    throw ValidationError("forced row set must be square with the column count");
  if (std::find(forced_rows.begin(), forced_rows.end(), M.delta_row()) == forced_rows.end())
    throw ValidationError("forced row set must include the delta row");
  RatMatrix full = M.specialize(spec);
  return finish_minor(M, spec, forced_rows, std::move(full));
}

Rational residue_monomial(const SelectedMinor& minor, const Exponent& h) {
  int col = minor.parent->col_index(h);
  if (col < 0)
    throw ValidationError("monomial " + monomial_to_string(h) + " is not in the critical basis");
  const int N = minor.matrix.rows();
  // det of the minor with the delta row replaced by the unit vector of h,
  // expanded along that row: cofactor parity times det(M~_h).
  std::vector<int> keep_rows, keep_cols;
  for (int i = 0; i + 1 < N; ++i) keep_rows.push_back(i);
  for (int j = 0; j < N; ++j)
    if (j != col) keep_cols.push_back(j);
  RatMatrix sub = minor.matrix.select(keep_rows, keep_cols);
  Rational det_h = bareiss_det(sub);
  Rational value = det_h / minor.det;
  if (((N - 1) + col) % 2 != 0) value = -value;
  return value;
}

Rational residue_poly(const SelectedMinor& minor, const CoxPolynomial& P) {
  const int N = minor.matrix.rows();
  RatMatrix replaced = minor.matrix;
  for (int j = 0; j < N; ++j) replaced(N - 1, j) = Rational(0);
  for (const auto& [e, c] : P.terms()) {
    int col = minor.parent->col_index(e);
    if (col < 0)
      throw ValidationError("polynomial has monomial " + monomial_to_string(e) +
                            " outside the critical basis");
    replaced(N - 1, col) = c.constant_value();
  }
  return bareiss_det(replaced) / minor.det;
}

std::vector<Rational> residue_basis(const SelectedMinor& minor) {
  const int N = minor.matrix.rows();
  // By Cramer's rule residue(x^h) = (M~^{-1})_{h, delta}, so the residues of
  // all basis monomials are the solution of M~ x = e_delta.
  std::vector<Rational> rhs(static_cast<std::size_t>(N), Rational(0));
  rhs[static_cast<std::size_t>(N - 1)] = Rational(1);
  auto x = solve_square(minor.matrix, rhs);
  if (!x) throw DegenerateError("minor became singular");
  return *x;
}

}  // namespace toricres
