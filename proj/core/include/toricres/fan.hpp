#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricres/cox_poly.hpp"
#include "toricres/linalg.hpp"
#include "toricres/matrix.hpp"

namespace toricres {

// Element of the grading group Z^s / image of m -> (<m, eta_i>)_i.  Two
// classes are equal iff their canonical images agree; the canonical image is
// computed through the Smith normal form of the ray matrix, so torsion is
// handled exactly.
struct DivisorClass {
  std::vector<Integer> representative;
  std::vector<Integer> canonical_image;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.canonical_image == b.canonical_image;
  }
  std::string to_string() const;
};

// Complete flag sigma_1 < ... < sigma_n, each sigma_i given by the indices of
// the rays it contains (sorted ascending).
struct Flag {
  std::vector<std::vector<int>> cones;
};

class Fan {
 public:
  Fan() = default;

  // Validates rays (primitive, nonzero, spanning), maximal cones
  // (full-dimensional) and completeness (every facet of a maximal cone is a
  // facet of exactly one other maximal cone).  Throws ValidationError.
  static Fan create(std::vector<std::vector<Integer>> rays,
                    std::vector<std::vector<int>> max_cones);

  int dim() const { return n_; }
  int num_rays() const { return s_; }
  const std::vector<std::vector<Integer>>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }

  DivisorClass divisor_class(const std::vector<Integer>& rep) const;
  DivisorClass degree_of_monomial(const Exponent& a) const;

  // Lattice points m of the section polytope P_b = { m : <m, eta_i> >= -b_i }.
  std::vector<std::vector<Integer>> section_points(const std::vector<Integer>& rep) const;

  // Exponents (<m, eta_i> + b_i)_i of the section points, in canonical
  // (ascending graded-lex) order.  This is the monomial basis of the graded
  // piece S_b.
  std::vector<Exponent> monomial_basis(const std::vector<Integer>& rep) const;

  // Strict convexity of the support function across every wall.
  bool is_ample(const std::vector<Integer>& rep) const;

  // One generator per maximal cone: product of the variables outside it.
  std::vector<Exponent> irrelevant_generators() const;

  void validate_flag(const Flag& flag) const;

  // z_1, ..., z_{n+1}; z_i collects the variables entering at stage i of the
  // flag, z_{n+1} the variables outside sigma_n.  Their product is x_0...x_{s-1}.
  std::vector<Exponent> flag_z_monomials(const Flag& flag) const;

  Integer ray_pairing(int ray, const std::vector<Integer>& m) const;

 private:
  int n_ = 0;
  int s_ = 0;
  std::vector<std::vector<Integer>> rays_;
  std::vector<std::vector<int>> max_cones_;
  IntMatrix snf_u_;                  // s x s unimodular
  std::vector<Integer> snf_diag_;    // first n invariants of the ray matrix

  RatMatrix ray_submatrix(const std::vector<int>& ray_idx) const;
  std::optional<std::vector<Rational>> cone_support_point(
      const std::vector<int>& cone, const std::vector<Integer>& rep) const;
  bool is_face_of_some_cone(const std::vector<int>& sigma) const;
};

// rho = sum of the degree representatives minus (1, ..., 1).
DivisorClass critical_degree(const Fan& fan,
                             const std::vector<std::vector<Integer>>& degrees);

// Index in Z^n of the lattice spanned by the differences of the lattice
// points of the section polytopes of the given degrees.
Integer lattice_index(const Fan& fan, const std::vector<std::vector<Integer>>& degrees);

}  // namespace toricres
