#include "toricres/laurent.hpp"

#include <algorithm>

#include "toricres/complexes.hpp"
#include "toricres/errors.hpp"

namespace toricres {

LaurentPoly LaurentPoly::monomial(const LaurentExp& e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const LaurentExp& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw DimensionError("Laurent term has wrong number of variables");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (num_vars_ == 0 && terms_.empty()) num_vars_ = o.num_vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (num_vars_ == 0 && terms_.empty()) num_vars_ = o.num_vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionError("variable count mismatch in product");
  LaurentPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentExp e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::log_derivative(int k) const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    out.add_term(e, c * Rational(e[static_cast<std::size_t>(k)]));
  return out;
}

LaurentPoly LaurentPoly::derivative(int k) const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    int ek = e[static_cast<std::size_t>(k)];
    if (ek == 0) continue;
    LaurentExp d = e;
    d[static_cast<std::size_t>(k)] -= 1;
    out.add_term(d, c * Rational(ek));
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw DimensionError("evaluation point has wrong length");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      int ek = e[i];
      if (ek > 0)
        for (int k = 0; k < ek; ++k) t *= point[i];
      else if (ek < 0) {
        if (point[i] == 0) throw ValidationError("evaluating a negative power at zero");
        for (int k = 0; k < -ek; ++k) t /= point[i];
      }
    }
    acc += t;
  }
  return acc;
}

int LaurentPoly::max_total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    deg = std::max(deg, d);
  }
  return deg;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rational a = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += toricres::to_string(a);
    } else {
      if (a != 1) out += toricres::to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  std::function<LaurentPoly(std::size_t, std::vector<int>&)> expand =
      [&](std::size_t row, std::vector<int>& active) -> LaurentPoly {
    if (active.empty()) {
      LaurentPoly one(m.empty() ? 0 : m[0][0].num_vars());
      one.add_term(LaurentExp(static_cast<std::size_t>(one.num_vars()), 0), Rational(1));
      return one;
    }
    LaurentPoly acc(m[0][0].num_vars());
    for (std::size_t k = 0; k < active.size(); ++k) {
      const LaurentPoly& entry = m[row][static_cast<std::size_t>(active[k])];
      if (entry.is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t j = 0; j < active.size(); ++j)
        if (j != k) rest.push_back(active[j]);
      LaurentPoly contrib = entry * expand(row + 1, rest);
      if (k % 2 == 1) contrib = -contrib;
      acc += contrib;
    }
    return acc;
  };
  std::vector<int> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
  return expand(0, cols);
}

void check_system(const LaurentSystem& sys) {
  if (static_cast<int>(sys.f.size()) != sys.n)
    throw ValidationError("Laurent system needs exactly n polynomials");
  for (const auto& f : sys.f) {
    if (f.num_vars() != sys.n) throw ValidationError("Laurent polynomial has wrong variable count");
    if (f.is_zero()) throw ValidationError("Laurent polynomial is zero");
  }
}

}  // namespace

LaurentPoly toric_jacobian(const LaurentSystem& sys) {
  check_system(sys);
  if (sys.n > 4)
    throw ValidationError("toric Jacobian limited to n <= 4 for symbolic expansion");
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(sys.n));
  for (int j = 0; j < sys.n; ++j)
    for (int k = 0; k < sys.n; ++k)
      m[static_cast<std::size_t>(j)].push_back(sys.f[static_cast<std::size_t>(j)].log_derivative(k));
  return laurent_det(m);
}

LaurentPoly affine_jacobian(const LaurentSystem& sys) {
  check_system(sys);
  if (sys.n > 4)
    throw ValidationError("affine Jacobian limited to n <= 4 for symbolic expansion");
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(sys.n));
  for (int j = 0; j < sys.n; ++j)
    for (int k = 0; k < sys.n; ++k)
      m[static_cast<std::size_t>(j)].push_back(sys.f[static_cast<std::size_t>(j)].derivative(k));
  return laurent_det(m);
}

Rational global_residue_direct(const LaurentSystem& sys, const LaurentPoly& q,
                               const std::vector<std::vector<Rational>>& roots) {
  check_system(sys);
  LaurentPoly jt = toric_jacobian(sys);
  Rational acc(0);
  for (const auto& xi : roots) {
    if (static_cast<int>(xi.size()) != sys.n) throw DimensionError("root has wrong length");
    for (const Rational& c : xi)
      if (c == 0) throw ValidationError("root lies outside the torus");
    for (const auto& f : sys.f)
      if (f.evaluate(xi) != 0) throw ValidationError("supplied point is not a common zero");
    Rational jv = jt.evaluate(xi);
    if (jv == 0) throw DegenerateError("root not simple");
    acc += q.evaluate(xi) / jv;
  }
  return acc;
}

HomogenizedSystem homogenize_dense(const LaurentSystem& sys, const HomogenizeRecipe& recipe) {
  check_system(sys);
  const int n = sys.n;
  for (const auto& f : sys.f)
    for (const auto& [e, c] : f.terms())
      for (int v : e)
        if (v < 0) throw ValidationError("dense homogenization needs polynomial supports");

  // P^n: homogenizing ray first so that x_0 is the extra variable.
  std::vector<std::vector<Integer>> rays;
  rays.push_back(std::vector<Integer>(static_cast<std::size_t>(n), Integer(-1)));
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> e(static_cast<std::size_t>(n), Integer(0));
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back(std::move(e));
  }
  std::vector<std::vector<int>> cones;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> cone;
    for (int r = 0; r <= n; ++r)
      if (r != skip) cone.push_back(r);
    cones.push_back(std::move(cone));
  }
  HomogenizedSystem out;
  out.fan = Fan::create(std::move(rays), std::move(cones));
  const int s = n + 1;

  const int k = (recipe.kind == HomogenizeRecipe::Kind::Macaulay) ? 1 : recipe.f0_power;
  if (k < 1) throw ValidationError("F_0 exponent must be positive");
  CoxPolynomial f0(s);
  {
    Exponent e(static_cast<std::size_t>(s), 0);
    e[0] = k;
    f0.add_term(e, CoeffPoly(Rational(1)));
  }
  out.F.push_back(std::move(f0));
  out.degrees.push_back([&] {
    std::vector<Integer> d(static_cast<std::size_t>(s), Integer(0));
    d[0] = k;
    return d;
  }());

  std::vector<int> total_degrees;
  for (const auto& f : sys.f) {
    int d = f.max_total_degree();
    total_degrees.push_back(d);
    CoxPolynomial F(s);
    for (const auto& [e, c] : f.terms()) {
      Exponent hom(static_cast<std::size_t>(s), 0);
      int sum = 0;
      for (int v = 0; v < n; ++v) {
        hom[static_cast<std::size_t>(v + 1)] = e[static_cast<std::size_t>(v)];
        sum += e[static_cast<std::size_t>(v)];
      }
      hom[0] = d - sum;
      F.add_term(hom, CoeffPoly(c));
    }
    out.F.push_back(std::move(F));
    out.degrees.push_back([&] {
      std::vector<Integer> rep(static_cast<std::size_t>(s), Integer(0));
      rep[0] = d;
      return rep;
    }());
  }

  if (recipe.kind == HomogenizeRecipe::Kind::Macaulay) {
    Exponent g(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < n; ++i)
      g[static_cast<std::size_t>(i + 1)] = total_degrees[static_cast<std::size_t>(i)] - 1;
    out.G = std::move(g);
  } else {
    if (!recipe.g) throw ValidationError("Power recipe needs an explicit G monomial");
    out.G = *recipe.g;
    if (static_cast<int>(out.G.size()) != s) throw DimensionError("G has wrong length");
  }

  DivisorClass rho = critical_degree(out.fan, out.degrees);
  if (!(out.fan.degree_of_monomial(out.G) == rho))
    throw ValidationError("G does not have the critical degree");
  return out;
}

Rational macaulay_global_residue(const LaurentSystem& sys) {
  HomogenizedSystem hs = homogenize_dense(sys, HomogenizeRecipe{});
  // Default flag on P^n: x_0's ray, then adding e_1, e_2, ...
  Flag flag;
  std::vector<int> acc{0};
  for (int i = 1; i <= hs.fan.dim(); ++i) {
    flag.cones.push_back(acc);
    acc.push_back(i);
  }

  MacaulayMatrix M = assemble_matrix(hs.fan, hs.F, hs.degrees, flag);
  SelectedMinor minor = select_minor(M, AtomAssignment{});
  return residue_monomial(minor, hs.G);
}

}  // namespace toricres
