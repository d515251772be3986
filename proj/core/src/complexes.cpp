#include "toricres/complexes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toricres/errors.hpp"

namespace toricres {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Integer> degree_rep_minus(const Fan& fan,
                                      const std::vector<std::vector<Integer>>& degrees,
                                      const std::vector<int>& subset) {
  // rho - alpha_I = sum of the degrees outside I minus (1, ..., 1)
  std::vector<Integer> rep(static_cast<std::size_t>(fan.num_rays()), Integer(-1));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (std::find(subset.begin(), subset.end(), static_cast<int>(i)) != subset.end()) continue;
    for (std::size_t k = 0; k < rep.size(); ++k) rep[k] += degrees[i][k];
  }
  return rep;
}

struct Skeleton {
  std::vector<ComplexTerm> terms;
  // per (p, component index): map monomial -> index within the component
  std::vector<std::vector<std::map<Exponent, int, GrlexLess>>> index;
};

Skeleton build_terms(const Fan& fan, const std::vector<std::vector<Integer>>& degrees,
                     bool with_delta_slot, const std::optional<Exponent>& omit) {
  const int n = fan.dim();
  Skeleton sk;
  sk.terms.resize(static_cast<std::size_t>(n + 2));
  sk.index.resize(static_cast<std::size_t>(n + 2));
  for (int p = 0; p <= n + 1; ++p) {
    ComplexTerm& term = sk.terms[static_cast<std::size_t>(p)];
    for (const auto& I : subsets_of_size(n + 1, p)) {
      ComplexComponent comp;
      comp.subset = I;
      comp.basis = fan.monomial_basis(degree_rep_minus(fan, degrees, I));
      if (p == 0 && omit) {
        auto it = std::find(comp.basis.begin(), comp.basis.end(), *omit);
        if (it == comp.basis.end())
          throw ValidationError("monomial " + monomial_to_string(*omit) +
                                " is not in the critical basis");
        comp.basis.erase(it);
      }
      comp.offset = term.dim;
      term.dim += static_cast<int>(comp.basis.size());
      term.components.push_back(std::move(comp));
    }
    if (p == 1 && with_delta_slot) {
      ComplexComponent slot;
      slot.delta_slot = true;
      slot.offset = term.dim;
      term.dim += 1;
      term.components.push_back(std::move(slot));
    }
    for (const auto& comp : term.components) {
      std::map<Exponent, int, GrlexLess> lookup;
      for (std::size_t b = 0; b < comp.basis.size(); ++b)
        lookup.emplace(comp.basis[b], comp.offset + static_cast<int>(b));
      sk.index[static_cast<std::size_t>(p)].push_back(std::move(lookup));
    }
  }
  return sk;
}

// Position of a subset J inside the list of |J|-subsets (they are generated
// in the same deterministic order every time).
int component_position(const std::vector<std::vector<int>>& all, const std::vector<int>& J) {
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == J) return static_cast<int>(i);
  throw Error("internal error: Koszul target component not found");
}

ComplexSpec build_complex(const Fan& fan, const std::vector<CoxPolynomial>& F,
                          const std::vector<std::vector<Integer>>& degrees,
                          const Flag* flag_for_delta, const std::optional<Exponent>& omit,
                          const AtomAssignment& spec) {
  const int n = fan.dim();
  if (static_cast<int>(F.size()) != n + 1 || static_cast<int>(degrees.size()) != n + 1)
    throw ValidationError("system needs exactly dim+1 polynomials and degrees");

  ComplexSpec cx;
  cx.n = n;
  cx.resultant_variant = flag_for_delta != nullptr;
  cx.omitted_column = omit;

  Skeleton sk = build_terms(fan, degrees, cx.resultant_variant, omit);
  cx.terms = sk.terms;

  std::vector<CoxPolynomial> Fspec;
  Fspec.reserve(F.size());
  for (const auto& f : F) Fspec.push_back(f.specialize(spec));

  for (int p = 1; p <= n + 1; ++p) {
    const ComplexTerm& src = cx.terms[static_cast<std::size_t>(p)];
    const ComplexTerm& dst = cx.terms[static_cast<std::size_t>(p - 1)];
    RatMatrix D(src.dim, dst.dim);
    auto dst_subsets = subsets_of_size(n + 1, p - 1);
    for (std::size_t ci = 0; ci < src.components.size(); ++ci) {
      const ComplexComponent& comp = src.components[ci];
      if (comp.delta_slot) continue;  // handled below
      for (std::size_t k = 0; k < comp.subset.size(); ++k) {
        std::vector<int> J = comp.subset;
        int eq = J[k];
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(k));
        int jpos = component_position(dst_subsets, J);
        const auto& lookup = sk.index[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(jpos)];
        int sign = (k % 2 == 0) ? 1 : -1;
        for (std::size_t b = 0; b < comp.basis.size(); ++b) {
          int row = comp.offset + static_cast<int>(b);
          for (const auto& [e, c] : Fspec[static_cast<std::size_t>(eq)].terms()) {
            Exponent target = exponent_add(comp.basis[b], e);
            auto it = lookup.find(target);
            if (it == lookup.end()) {
              if (p == 1 && omit && target == *omit) continue;  // corestricted away
              throw Error("internal error: Koszul product missing from target basis");
            }
            Rational v = c.constant_value();
            D(row, it->second) += (sign > 0) ? v : -v;
          }
        }
      }
    }
    if (p == 1 && cx.resultant_variant) {
      const ComplexComponent& slot = cx.terms[1].components.back();
      CoxPolynomial delta = delta_element(fan, F, degrees, *flag_for_delta).specialize(spec);
      const auto& lookup = sk.index[0][0];
      for (const auto& [e, c] : delta.terms()) {
        auto it = lookup.find(e);
        if (it == lookup.end())
          throw Error("internal error: delta monomial missing from the critical basis");
        D(slot.offset, it->second) = c.constant_value();
      }
    }
    cx.diff.push_back(std::move(D));
  }

  // d o d = 0 at the specialization
  for (int p = 2; p <= n + 1; ++p) {
    const RatMatrix& A = cx.diff[static_cast<std::size_t>(p - 1)];
    const RatMatrix& B = cx.diff[static_cast<std::size_t>(p - 2)];
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < B.cols(); ++j) {
        Rational acc(0);
        for (int k = 0; k < A.cols(); ++k) acc += A(i, k) * B(k, j);
        if (acc != 0) throw Error("internal error: differentials do not compose to zero");
      }
  }
  return cx;
}

}  // namespace

ComplexSpec build_resultant_complex(const Fan& fan, const std::vector<CoxPolynomial>& F,
                                    const std::vector<std::vector<Integer>>& degrees,
                                    const Flag& flag, const AtomAssignment& spec) {
  return build_complex(fan, F, degrees, &flag, std::nullopt, spec);
}

ComplexSpec build_subresultant_complex(const Fan& fan, const std::vector<CoxPolynomial>& F,
                                       const std::vector<std::vector<Integer>>& degrees,
                                       const Exponent& h, const AtomAssignment& spec) {
  DivisorClass rho = critical_degree(fan, degrees);
  if (!(fan.degree_of_monomial(h) == rho))
    throw ValidationError("monomial " + monomial_to_string(h) + " does not have critical degree");
  return build_complex(fan, F, degrees, nullptr, h, spec);
}

Rational cayley_determinant(const ComplexSpec& cx) {
  Rational value(1);
  std::vector<int> selected_prev;  // rows of the previous stage
  for (std::size_t p = 1; p < cx.terms.size(); ++p) {
    const RatMatrix& D = cx.diff[p - 1];
    std::vector<int> cols;
    {
      std::vector<char> taken(static_cast<std::size_t>(D.cols()), 0);
      for (int r : selected_prev) taken[static_cast<std::size_t>(r)] = 1;
      for (int c = 0; c < D.cols(); ++c)
        if (!taken[static_cast<std::size_t>(c)]) cols.push_back(c);
    }
    if (cols.empty()) {
      selected_prev.clear();
      continue;
    }
    std::vector<int> all_rows(static_cast<std::size_t>(D.rows()));
    std::iota(all_rows.begin(), all_rows.end(), 0);
    RatMatrix sub = D.select(all_rows, cols);
    RankProfile prof = rank_profile(sub);
    if (prof.rank != static_cast<int>(cols.size()))
      throw DegenerateError("specialization non-generic for chosen subsets");
    std::vector<int> rows = prof.row_indices;
    std::sort(rows.begin(), rows.end());
    Rational det = bareiss_det(sub.select(rows, [&] {
      std::vector<int> local(cols.size());
      std::iota(local.begin(), local.end(), 0);
      return local;
    }()));
    if (det == 0) throw DegenerateError("specialization non-generic for chosen subsets");
    if (p % 2 == 1)
      value *= det;
    else
      value /= det;
    selected_prev = std::move(rows);
  }
  if (static_cast<int>(selected_prev.size()) != cx.terms.back().dim)
    throw DegenerateError("complex is not exact at the deepest term");
  return value;
}

Rational resultant_power(const Fan& fan, const std::vector<CoxPolynomial>& F,
                         const std::vector<std::vector<Integer>>& degrees, const Flag& flag,
                         const AtomAssignment& spec) {
  return cayley_determinant(build_resultant_complex(fan, F, degrees, flag, spec));
}

Rational subresultant_value(const Fan& fan, const std::vector<CoxPolynomial>& F,
                            const std::vector<std::vector<Integer>>& degrees, const Exponent& h,
                            const AtomAssignment& spec) {
  ComplexSpec cx = build_subresultant_complex(fan, F, degrees, h, spec);
  // Distinguish "h in the ideal" (subresultant 0 by definition) from a
  // non-generic specialization: the multiplication rows must span a
  // hyperplane of S_rho, and drop rank exactly when restricted away from h
  // iff h lies in the span.
  const RatMatrix& D1 = cx.diff[0];
  DivisorClass rho = critical_degree(fan, degrees);
  std::vector<Exponent> full_basis = fan.monomial_basis(rho.representative);
  const int N = static_cast<int>(full_basis.size());
  RatMatrix full(D1.rows(), N);
  {
    // Reinsert the omitted column as zero, then fill the products.
    std::map<Exponent, int, GrlexLess> col_of;
    for (int j = 0; j < N; ++j) col_of.emplace(full_basis[static_cast<std::size_t>(j)], j);
    std::vector<CoxPolynomial> Fspec;
    for (const auto& f : F) Fspec.push_back(f.specialize(spec));
    int row = 0;
    for (const auto& comp : cx.terms[1].components) {
      for (const auto& a : comp.basis) {
        for (const auto& [e, c] : Fspec[static_cast<std::size_t>(comp.subset[0])].terms())
          full(row, col_of.at(exponent_add(a, e))) += c.constant_value();
        ++row;
      }
    }
  }
  if (rank_of(full) < N - 1)
    throw DegenerateError("non-generic specialization; resultant may vanish");
  if (rank_of(D1) < N - 1) return Rational(0);
  return cayley_determinant(cx);
}

std::pair<Rational, Rational> residue_cross_check(const Fan& fan,
                                                  const std::vector<CoxPolynomial>& F,
                                                  const std::vector<std::vector<Integer>>& degrees,
                                                  const Flag& flag, const Exponent& h,
                                                  const AtomAssignment& spec) {
  MacaulayMatrix M = assemble_matrix(fan, F, degrees, flag);
  SelectedMinor minor = select_minor(M, spec);
  Rational direct = residue_monomial(minor, h);
  Rational sh = subresultant_value(fan, F, degrees, h, spec);
  Rational power = resultant_power(fan, F, degrees, flag, spec);
  return {direct, sh / power};
}

namespace {

UniPoly to_unipoly(const CoeffPoly& p, const Atom& var) {
  UniPoly out;
  for (const auto& [m, c] : p.terms()) {
    int deg = 0;
    for (const auto& [a, e] : m) {
      if (a == var)
        deg = e;
      else
        throw ValidationError("entry still contains an unspecialized atom");
    }
    UniPoly t(c);
    for (int k = 0; k < deg; ++k) t = t * UniPoly::variable();
    out += t;
  }
  return out;
}

UniPoly unipoly_det(const std::vector<std::vector<UniPoly>>& m) {
  // cofactor expansion; sizes are guarded by the caller
  const std::size_t n = m.size();
  if (n == 0) return UniPoly(Rational(1));
  std::function<UniPoly(std::size_t, std::vector<int>&)> expand =
      [&](std::size_t row, std::vector<int>& active) -> UniPoly {
    if (active.empty()) return UniPoly(Rational(1));
    UniPoly acc;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const UniPoly& entry = m[row][static_cast<std::size_t>(active[k])];
      if (entry.is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t j = 0; j < active.size(); ++j)
        if (j != k) rest.push_back(active[j]);
      UniPoly sub = expand(row + 1, rest);
      UniPoly contrib = entry * sub;
      if (k % 2 == 1) contrib = -contrib;
      acc += contrib;
    }
    return acc;
  };
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return expand(0, cols);
}

}  // namespace

UniPoly subresultant_minor_gcd(const Fan& fan, const std::vector<CoxPolynomial>& F,
                               const std::vector<std::vector<Integer>>& degrees, const Exponent& h,
                               const AtomAssignment& partial, const Atom& free_atom,
                               int max_cols) {
  const int n = fan.dim();
  DivisorClass rho = critical_degree(fan, degrees);
  std::vector<Exponent> basis = fan.monomial_basis(rho.representative);
  auto it = std::find(basis.begin(), basis.end(), h);
  if (it == basis.end())
    throw ValidationError("monomial " + monomial_to_string(h) + " is not in the critical basis");
  basis.erase(it);
  const int cols = static_cast<int>(basis.size());
  if (cols > max_cols)
    throw ValidationError("symbolic minor gcd refused: " + std::to_string(cols) +
                          " columns exceed limit " + std::to_string(max_cols));
  std::map<Exponent, int, GrlexLess> col_of;
  for (int j = 0; j < cols; ++j) col_of.emplace(basis[static_cast<std::size_t>(j)], j);

  std::vector<std::vector<UniPoly>> rows;
  for (int i = 0; i <= n; ++i) {
    for (const auto& a : fan.monomial_basis(degree_rep_minus(fan, degrees, {i}))) {
      std::vector<UniPoly> row(static_cast<std::size_t>(cols));
      for (const auto& [e, c] : F[static_cast<std::size_t>(i)].terms()) {
        Exponent target = exponent_add(a, e);
        auto jt = col_of.find(target);
        if (jt == col_of.end()) continue;  // the omitted column
        row[static_cast<std::size_t>(jt->second)] += to_unipoly(c.partial_evaluate(partial), free_atom);
      }
      rows.push_back(std::move(row));
    }
  }
  const int m = static_cast<int>(rows.size());
  if (m < cols) throw ValidationError("symbolic minor gcd: matrix has too few rows");
  long long count = 1;
  for (int i = 0; i < cols; ++i) count = count * (m - i) / (i + 1);
  if (count > 512) throw ValidationError("symbolic minor gcd refused: too many maximal minors");

  UniPoly g;
  for (const auto& pick : subsets_of_size(m, cols)) {
    std::vector<std::vector<UniPoly>> sub;
    sub.reserve(pick.size());
    for (int r : pick) sub.push_back(rows[static_cast<std::size_t>(r)]);
    UniPoly det = unipoly_det(sub);
    g = UniPoly::gcd(g, det);
  }
  return g;
}

}  // namespace toricres
