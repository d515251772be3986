#include "toricres/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricres/errors.hpp"

namespace toricres {

namespace {

// All k-element subsets of {0, ..., n-1}, ascending.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw ValidationError("integer out of supported range");
  return z.get_si();
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::string DivisorClass::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < representative.size(); ++i) {
    if (i) out += ",";
    out += toricres::to_string(representative[i]);
  }
  return out + "]";
}

Fan Fan::create(std::vector<std::vector<Integer>> rays, std::vector<std::vector<int>> max_cones) {
  Fan fan;
  if (rays.empty()) throw ValidationError("fan needs at least one ray");
  fan.n_ = static_cast<int>(rays[0].size());
  fan.s_ = static_cast<int>(rays.size());
  if (fan.n_ < 1) throw ValidationError("fan dimension must be positive");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (static_cast<int>(rays[i].size()) != fan.n_)
      throw ValidationError("ray " + std::to_string(i) + " has wrong dimension");
    Integer g(0);
    for (const Integer& v : rays[i]) g = gcd(g, v);
    if (g == 0) throw ValidationError("ray " + std::to_string(i) + " is zero");
    if (g != 1) throw ValidationError("ray " + std::to_string(i) + " is not primitive");
  }
  fan.rays_ = std::move(rays);

  if (max_cones.empty()) throw ValidationError("fan needs at least one maximal cone");
  for (auto& cone : max_cones) {
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    for (int r : cone)
      if (r < 0 || r >= fan.s_) throw ValidationError("cone references unknown ray");
    if (static_cast<int>(cone.size()) < fan.n_)
      throw ValidationError("maximal cone has too few rays");
  }
  fan.max_cones_ = std::move(max_cones);

  // Grading data: Smith normal form of the s x n ray matrix.
  IntMatrix R(fan.s_, fan.n_);
  for (int i = 0; i < fan.s_; ++i)
    for (int j = 0; j < fan.n_; ++j) R(i, j) = fan.rays_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  SmithResult snf = smith_normal_form(R);
  fan.snf_diag_ = snf.invariants();
  for (const Integer& d : fan.snf_diag_)
    if (d == 0) throw ValidationError("rays do not span the ambient lattice");
  fan.snf_u_ = std::move(snf.U);

  // Each maximal cone must be full-dimensional.
  for (const auto& cone : fan.max_cones_)
    if (rank_of(fan.ray_submatrix(cone)) != fan.n_)
      throw ValidationError("maximal cone is not full-dimensional");

  // Completeness: every facet of a maximal cone is shared with exactly one
  // other maximal cone.  Facets are computed from (n-1)-subsets spanning a
  // hyperplane whose normal has all cone generators on one side.
  std::map<std::vector<int>, std::vector<int>> facet_owners;  // facet ray set -> cones
  for (std::size_t ci = 0; ci < fan.max_cones_.size(); ++ci) {
    const auto& cone = fan.max_cones_[ci];
    std::set<std::vector<int>> seen;
    for_each_subset(static_cast<int>(cone.size()), fan.n_ - 1, [&](const std::vector<int>& pick) {
      std::vector<int> sub;
      sub.reserve(pick.size());
      for (int p : pick) sub.push_back(cone[static_cast<std::size_t>(p)]);
      RatMatrix A = fan.ray_submatrix(sub);
      if (rank_of(A) != fan.n_ - 1) return;
      auto kernel = nullspace(A);
      if (kernel.size() != 1) return;
      // Scale the normal to a primitive integer vector.
      std::vector<Integer> u(static_cast<std::size_t>(fan.n_));
      Integer l(1);
      for (const Rational& q : kernel[0]) l = lcm(l, Integer(q.get_den()));
      Integer g(0);
      for (int j = 0; j < fan.n_; ++j) {
        Rational scaled = kernel[0][static_cast<std::size_t>(j)] * Rational(l);
        u[static_cast<std::size_t>(j)] = scaled.get_num();
        g = gcd(g, u[static_cast<std::size_t>(j)]);
      }
      for (auto& v : u) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      int pos = 0, neg = 0;
      for (int r : cone) {
        int sg = sign(fan.ray_pairing(r, u));
        if (sg > 0) ++pos;
        if (sg < 0) ++neg;
      }
      if (pos > 0 && neg > 0) return;  // not a supporting hyperplane
      std::vector<int> facet;
      for (int r : cone)
        if (fan.ray_pairing(r, u) == 0) facet.push_back(r);
      if (seen.insert(facet).second) facet_owners[facet].push_back(static_cast<int>(ci));
    });
  }
  for (const auto& [facet, owners] : facet_owners) {
    if (owners.size() != 2) {
      std::string rays_str;
      for (int r : facet) rays_str += (rays_str.empty() ? "" : ",") + std::to_string(r);
      throw ValidationError("fan is not complete: facet {" + rays_str + "} belongs to " +
                            std::to_string(owners.size()) + " maximal cone(s)");
    }
  }
  return fan;
}

Integer Fan::ray_pairing(int ray, const std::vector<Integer>& m) const {
  Integer acc(0);
  for (int j = 0; j < n_; ++j)
    acc += rays_[static_cast<std::size_t>(ray)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(j)];
  return acc;
}

RatMatrix Fan::ray_submatrix(const std::vector<int>& ray_idx) const {
  RatMatrix A(static_cast<int>(ray_idx.size()), n_);
  for (std::size_t i = 0; i < ray_idx.size(); ++i)
    for (int j = 0; j < n_; ++j)
      A(static_cast<int>(i), j) =
          Rational(rays_[static_cast<std::size_t>(ray_idx[i])][static_cast<std::size_t>(j)]);
  return A;
}

DivisorClass Fan::divisor_class(const std::vector<Integer>& rep) const {
  if (static_cast<int>(rep.size()) != s_)
    throw DimensionError("divisor representative has wrong length");
  DivisorClass cls;
  cls.representative = rep;
  cls.canonical_image.resize(static_cast<std::size_t>(s_));
  for (int i = 0; i < s_; ++i) {
    Integer c(0);
    for (int j = 0; j < s_; ++j) c += snf_u_(i, j) * rep[static_cast<std::size_t>(j)];
    if (i < n_ && snf_diag_[static_cast<std::size_t>(i)] != 1)
      c = mod_nonneg(c, snf_diag_[static_cast<std::size_t>(i)]);
    else if (i < n_)
      c = 0;
    cls.canonical_image[static_cast<std::size_t>(i)] = c;
  }
  return cls;
}

DivisorClass Fan::degree_of_monomial(const Exponent& a) const {
  if (static_cast<int>(a.size()) != s_) throw DimensionError("exponent vector has wrong length");
  std::vector<Integer> rep(a.begin(), a.end());
  return divisor_class(rep);
}

std::vector<std::vector<Integer>> Fan::section_points(const std::vector<Integer>& rep) const {
  if (static_cast<int>(rep.size()) != s_)
    throw DimensionError("divisor representative has wrong length");
  // Vertex candidates from n-subsets of the bounding half-spaces.
  std::vector<std::vector<Rational>> vertices;
  for_each_subset(s_, n_, [&](const std::vector<int>& pick) {
    RatMatrix A = ray_submatrix(pick);
    std::vector<Rational> rhs(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      rhs[static_cast<std::size_t>(i)] = Rational(-rep[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
    auto m = solve_square(A, rhs);
    if (!m) return;
    for (int r = 0; r < s_; ++r) {
      Rational v(0);
      for (int j = 0; j < n_; ++j)
        v += Rational(rays_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) * (*m)[static_cast<std::size_t>(j)];
      if (v < Rational(-rep[static_cast<std::size_t>(r)])) return;
    }
    vertices.push_back(std::move(*m));
  });
  if (vertices.empty()) {
    // Nonempty but vertex-free would mean the polytope is unbounded, which a
    // complete fan rules out; detect it anyway for defective input.
    RatMatrix A = ray_submatrix([&] {
      std::vector<int> all(static_cast<std::size_t>(s_));
      for (int i = 0; i < s_; ++i) all[static_cast<std::size_t>(i)] = i;
      return all;
    }());
    std::vector<Rational> rhs(static_cast<std::size_t>(s_));
    for (int i = 0; i < s_; ++i) rhs[static_cast<std::size_t>(i)] = Rational(-rep[static_cast<std::size_t>(i)]);
    if (fourier_motzkin_feasible(A, rhs))
      throw ValidationError("section polytope is unbounded; fan is not complete");
    return {};
  }
  std::vector<Integer> lo(static_cast<std::size_t>(n_)), hi(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    Rational mn = vertices[0][static_cast<std::size_t>(j)], mx = mn;
    for (const auto& v : vertices) {
      mn = std::min(mn, v[static_cast<std::size_t>(j)]);
      mx = std::max(mx, v[static_cast<std::size_t>(j)]);
    }
    lo[static_cast<std::size_t>(j)] = ceil_div(mn.get_num(), mn.get_den());
    hi[static_cast<std::size_t>(j)] = floor_div(mx.get_num(), mx.get_den());
  }
  std::vector<std::vector<Integer>> points;
  std::vector<Integer> m = lo;
  for (;;) {
    bool inside = true;
    for (int r = 0; r < s_ && inside; ++r)
      if (ray_pairing(r, m) + rep[static_cast<std::size_t>(r)] < 0) inside = false;
    if (inside) points.push_back(m);
    int j = 0;
    for (; j < n_; ++j) {
      if (m[static_cast<std::size_t>(j)] < hi[static_cast<std::size_t>(j)]) {
        ++m[static_cast<std::size_t>(j)];
        for (int k = 0; k < j; ++k) m[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
        break;
      }
    }
    if (j == n_) break;
  }
  return points;
}

std::vector<Exponent> Fan::monomial_basis(const std::vector<Integer>& rep) const {
  std::vector<Exponent> out;
  for (const auto& m : section_points(rep)) {
    Exponent a(static_cast<std::size_t>(s_));
    for (int r = 0; r < s_; ++r)
      a[static_cast<std::size_t>(r)] = static_cast<int>(to_ll(ray_pairing(r, m) + rep[static_cast<std::size_t>(r)]));
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::optional<std::vector<Rational>> Fan::cone_support_point(
    const std::vector<int>& cone, const std::vector<Integer>& rep) const {
  // Unique m with <m, eta_i> = -b_i on n independent rays of the cone, if it
  // satisfies the equality on all the cone's rays.
  RatMatrix A = ray_submatrix(cone);
  RankProfile prof = rank_profile(A);
  if (prof.rank != n_) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n_));
  for (int r : prof.row_indices) chosen.push_back(cone[static_cast<std::size_t>(r)]);
  RatMatrix S = ray_submatrix(chosen);
  std::vector<Rational> rhs(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    rhs[static_cast<std::size_t>(i)] = Rational(-rep[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])]);
  auto m = solve_square(S, rhs);
  if (!m) return std::nullopt;
  for (int r : cone) {
    Rational v(0);
    for (int j = 0; j < n_; ++j)
      v += Rational(rays_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) * (*m)[static_cast<std::size_t>(j)];
    if (v != Rational(-rep[static_cast<std::size_t>(r)])) return std::nullopt;
  }
  return m;
}

bool Fan::is_ample(const std::vector<Integer>& rep) const {
  if (static_cast<int>(rep.size()) != s_)
    throw DimensionError("divisor representative has wrong length");
  for (const auto& cone : max_cones_) {
    auto m = cone_support_point(cone, rep);
    if (!m) return false;
    for (int r = 0; r < s_; ++r) {
      if (std::find(cone.begin(), cone.end(), r) != cone.end()) continue;
      Rational v(0);
      for (int j = 0; j < n_; ++j)
        v += Rational(rays_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) * (*m)[static_cast<std::size_t>(j)];
      if (!(v > Rational(-rep[static_cast<std::size_t>(r)]))) return false;
    }
  }
  return true;
}

std::vector<Exponent> Fan::irrelevant_generators() const {
  std::vector<Exponent> out;
  out.reserve(max_cones_.size());
  for (const auto& cone : max_cones_) {
    Exponent e(static_cast<std::size_t>(s_), 1);
    for (int r : cone) e[static_cast<std::size_t>(r)] = 0;
    out.push_back(std::move(e));
  }
  return out;
}

bool Fan::is_face_of_some_cone(const std::vector<int>& sigma) const {
  for (const auto& cone : max_cones_) {
    if (!std::includes(cone.begin(), cone.end(), sigma.begin(), sigma.end())) continue;
    std::vector<int> rest;
    for (int r : cone)
      if (std::find(sigma.begin(), sigma.end(), r) == sigma.end()) rest.push_back(r);
    if (rest.empty()) return true;  // sigma is the cone itself
    // Supporting functional: u orthogonal to sigma, strictly positive on the
    // remaining generators.  Parametrize u through the nullspace of sigma.
    auto kernel = nullspace(ray_submatrix(sigma));
    if (kernel.empty()) continue;
    RatMatrix B(static_cast<int>(rest.size()), static_cast<int>(kernel.size()));
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t k = 0; k < kernel.size(); ++k) {
        Rational v(0);
        for (int j = 0; j < n_; ++j)
          v += Rational(rays_[static_cast<std::size_t>(rest[i])][static_cast<std::size_t>(j)]) * kernel[k][static_cast<std::size_t>(j)];
        B(static_cast<int>(i), static_cast<int>(k)) = v;
      }
    std::vector<Rational> ones(rest.size(), Rational(1));
    if (fourier_motzkin_feasible(B, ones)) return true;
  }
  return false;
}

void Fan::validate_flag(const Flag& flag) const {
  if (static_cast<int>(flag.cones.size()) != n_)
    throw ValidationError("flag must have exactly dim(fan) cones");
  for (int i = 0; i < n_; ++i) {
    std::vector<int> sigma = flag.cones[static_cast<std::size_t>(i)];
    std::sort(sigma.begin(), sigma.end());
    if (std::unique(sigma.begin(), sigma.end()) != sigma.end())
      throw ValidationError("flag cone has repeated rays");
    for (int r : sigma)
      if (r < 0 || r >= s_) throw ValidationError("flag cone references unknown ray");
    if (rank_of(ray_submatrix(sigma)) != i + 1)
      throw ValidationError("flag cone " + std::to_string(i + 1) + " does not have dimension " +
                            std::to_string(i + 1));
    if (i > 0) {
      const auto& prev = flag.cones[static_cast<std::size_t>(i - 1)];
      for (int r : prev)
        if (std::find(sigma.begin(), sigma.end(), r) == sigma.end())
          throw ValidationError("flag cones are not nested");
    }
    if (!is_face_of_some_cone(sigma))
      throw ValidationError("flag cone " + std::to_string(i + 1) + " is not a face of the fan");
  }
}

std::vector<Exponent> Fan::flag_z_monomials(const Flag& flag) const {
  validate_flag(flag);
  std::vector<Exponent> z;
  z.reserve(static_cast<std::size_t>(n_ + 1));
  std::vector<char> taken(static_cast<std::size_t>(s_), 0);
  for (int i = 0; i < n_; ++i) {
    Exponent e(static_cast<std::size_t>(s_), 0);
    for (int r : flag.cones[static_cast<std::size_t>(i)]) {
      if (!taken[static_cast<std::size_t>(r)]) {
        e[static_cast<std::size_t>(r)] = 1;
        taken[static_cast<std::size_t>(r)] = 1;
      }
    }
    z.push_back(std::move(e));
  }
  Exponent last(static_cast<std::size_t>(s_), 0);
  for (int r = 0; r < s_; ++r)
    if (!taken[static_cast<std::size_t>(r)]) last[static_cast<std::size_t>(r)] = 1;
  z.push_back(std::move(last));
  return z;
}

DivisorClass critical_degree(const Fan& fan, const std::vector<std::vector<Integer>>& degrees) {
  if (static_cast<int>(degrees.size()) != fan.dim() + 1)
    throw ValidationError("critical degree needs exactly dim+1 degrees");
  std::vector<Integer> rep(static_cast<std::size_t>(fan.num_rays()), Integer(-1));
  for (const auto& d : degrees) {
    if (static_cast<int>(d.size()) != fan.num_rays())
      throw DimensionError("degree representative has wrong length");
    for (std::size_t i = 0; i < d.size(); ++i) rep[i] += d[i];
  }
  return fan.divisor_class(rep);
}

Integer lattice_index(const Fan& fan, const std::vector<std::vector<Integer>>& degrees) {
  std::vector<std::vector<Integer>> points;
  for (const auto& d : degrees) {
    auto pts = fan.section_points(d);
    if (pts.empty())
      throw ValidationError("a section polytope has no lattice points");
    points.insert(points.end(), pts.begin(), pts.end());
  }
  const auto& base = points.front();
  IntMatrix diffs(static_cast<int>(points.size()) - 1, fan.dim());
  for (std::size_t i = 1; i < points.size(); ++i)
    for (int j = 0; j < fan.dim(); ++j)
      diffs(static_cast<int>(i) - 1, j) = points[i][static_cast<std::size_t>(j)] - base[static_cast<std::size_t>(j)];
  SmithResult snf = smith_normal_form(diffs);
  Integer index(1);
  auto inv = snf.invariants();
  if (static_cast<int>(inv.size()) < fan.dim())
    throw ValidationError("supports do not span");
  for (int i = 0; i < fan.dim(); ++i) {
    if (inv[static_cast<std::size_t>(i)] == 0) throw ValidationError("supports do not span");
    index *= inv[static_cast<std::size_t>(i)];
  }
  return index;
}

}  // namespace toricres
