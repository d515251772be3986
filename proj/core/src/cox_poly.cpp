#include "toricres/cox_poly.hpp"

#include <algorithm>

#include "toricres/errors.hpp"

namespace toricres {

int exponent_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

bool monomial_divides(const Exponent& divisor, const Exponent& e) {
  if (divisor.size() != e.size()) throw DimensionError("exponent length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (divisor[i] > e[i]) return false;
  return true;
}

Exponent exponent_sub(const Exponent& e, const Exponent& divisor) {
  Exponent out = e;
  for (std::size_t i = 0; i < e.size(); ++i) out[i] -= divisor[i];
  return out;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionError("exponent length mismatch");
  Exponent out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::string monomial_to_string(const Exponent& e, const std::vector<std::string>& var_names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += (i < var_names.size()) ? var_names[i] : "x" + std::to_string(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da < db;
  return a < b;
}

CoxPolynomial CoxPolynomial::monomial(const Exponent& e, CoeffPoly c) {
  CoxPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void CoxPolynomial::add_term(const Exponent& e, const CoeffPoly& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw DimensionError("term has wrong number of variables");
  for (int v : e)
    if (v < 0) throw ValidationError("negative exponent in CoxPolynomial");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoeffPoly CoxPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

CoxPolynomial CoxPolynomial::operator-() const {
  CoxPolynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CoxPolynomial& CoxPolynomial::operator+=(const CoxPolynomial& o) {
  if (num_vars_ == 0 && terms_.empty()) num_vars_ = o.num_vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CoxPolynomial& CoxPolynomial::operator-=(const CoxPolynomial& o) {
  if (num_vars_ == 0 && terms_.empty()) num_vars_ = o.num_vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CoxPolynomial operator*(const CoxPolynomial& a, const CoxPolynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionError("variable count mismatch in product");
  CoxPolynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(exponent_add(ea, eb), ca * cb);
  return out;
}

CoxPolynomial CoxPolynomial::multiply_monomial(const Exponent& e) const {
  CoxPolynomial out(num_vars_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(exponent_add(t, e), c);
  return out;
}

std::optional<CoxPolynomial> CoxPolynomial::divide_monomial(const Exponent& e) const {
  CoxPolynomial out(num_vars_);
  for (const auto& [t, c] : terms_) {
    if (!monomial_divides(e, t)) return std::nullopt;
    out.terms_.emplace(exponent_sub(t, e), c);
  }
  return out;
}

CoxPolynomial CoxPolynomial::scale(const CoeffPoly& c) const {
  CoxPolynomial out(num_vars_);
  for (const auto& [e, t] : terms_) out.add_term(e, t * c);
  return out;
}

CoxPolynomial CoxPolynomial::specialize(const AtomAssignment& values) const {
  CoxPolynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, CoeffPoly(c.evaluate(values)));
  return out;
}

Rational CoxPolynomial::evaluate(const std::vector<Rational>& point,
                                 const AtomAssignment& values) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw DimensionError("evaluation point has wrong length");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c.evaluate(values);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::vector<Atom> CoxPolynomial::atoms() const {
  std::vector<Atom> out;
  for (const auto& [e, c] : terms_)
    for (const Atom& a : c.atoms())
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::string CoxPolynomial::to_string(const std::vector<std::string>& var_names,
                                     const AtomNamer& namer) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string(namer);
    bool wrap = c.term_count() > 1;
    if (wrap) cs = "(" + cs + ")";
    if (exponent_degree(e) == 0) {
      out += cs;
    } else if (cs == "1") {
      out += monomial_to_string(e, var_names);
    } else {
      out += cs + "*" + monomial_to_string(e, var_names);
    }
  }
  return out;
}

CoxPolynomial small_symbolic_det(const std::vector<std::vector<CoxPolynomial>>& m, int max_size) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw DimensionError("symbolic determinant of a non-square matrix");
  if (n > max_size)
    throw ValidationError("symbolic determinant refused: size " + std::to_string(n) +
                          " exceeds limit " + std::to_string(max_size));
  if (n == 0) {
    CoxPolynomial one(0);
    one.add_term(Exponent{}, CoeffPoly(Rational(1)));
    return one;
  }
  const int vars = m[0][0].num_vars();
  // Cofactor expansion along the first remaining row.
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
  std::function<CoxPolynomial(int, std::vector<int>&)> expand =
      [&](int row, std::vector<int>& active) -> CoxPolynomial {
    CoxPolynomial acc(vars);
    if (active.empty()) {
      acc.add_term(Exponent(static_cast<std::size_t>(vars), 0), CoeffPoly(Rational(1)));
      return acc;
    }
    for (std::size_t k = 0; k < active.size(); ++k) {
      const CoxPolynomial& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(active[k])];
      if (entry.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(active.size() - 1);
      for (std::size_t j = 0; j < active.size(); ++j)
        if (j != k) rest.push_back(active[j]);
      CoxPolynomial sub = expand(row + 1, rest);
      CoxPolynomial contrib = entry * sub;
      if (k % 2 == 1) contrib = -contrib;
      acc += contrib;
    }
    return acc;
  };
  return expand(0, cols);
}

}  // namespace toricres
