#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricres/laurent.hpp"
#include "toricres/macaulay.hpp"

namespace toricres {

// Independent formula for the sparse resultant at a specialization, carried
// by instances where one is known.  DetM: the full Macaulay matrix is square
// and its determinant is the resultant.  CoeffDet: all polynomials share one
// support of size dim+1 and the resultant is the determinant of the
// coefficient matrix.
enum class ResultantOracle { DetM, CoeffDet };

// A polynomial system on a toric variety, as read from an input file.
struct Instance {
  std::string name;
  Fan fan;
  std::vector<std::string> var_names;
  std::vector<std::vector<Integer>> degrees;
  std::vector<CoxPolynomial> polys;
  std::vector<Flag> flags;
  std::optional<Exponent> h;
  std::optional<CoxPolynomial> P;
  std::optional<ResultantOracle> oracle;

  std::map<std::string, Atom> atom_by_name;
  std::map<Atom, std::string> name_by_atom;

  std::string atom_name(const Atom& a) const;
  AtomNamer namer() const;
  std::vector<Atom> atoms() const;  // sorted

  // Draws one value per atom in sorted atom order.
  AtomAssignment random_specialization(std::uint64_t seed) const;

  const Flag& flag(int index) const;
};

// Laurent-system input for global residue computations.
struct GlobalInstance {
  std::string name;
  LaurentSystem system;
  HomogenizeRecipe recipe;
  std::vector<std::vector<Rational>> roots;  // optional known torus roots
};

bool is_global_instance_text(const std::string& text);

Instance parse_instance_text(const std::string& text, const std::string& origin = "<input>");
Instance parse_instance_file(const std::string& path);
GlobalInstance parse_global_text(const std::string& text, const std::string& origin = "<input>");
GlobalInstance parse_global_file(const std::string& path);

std::string serialize_instance(const Instance& inst);

// "x3^2*x4^2" with the instance's variable names.
Exponent parse_monomial_expr(const Instance& inst, const std::string& expr);
// "5*x1^2*x2 - 1/3*x3" with rational coefficients.
CoxPolynomial parse_poly_expr(const Instance& inst, const std::string& expr);

// {"a0": "3/2", ...}
AtomAssignment parse_assignment_text(const Instance& inst, const std::string& text);
AtomAssignment parse_assignment_file(const Instance& inst, const std::string& path);

// Value of the instance's resultant oracle at a specialization.
Rational resultant_oracle_value(const Instance& inst, const AtomAssignment& spec);

std::string read_text_file(const std::string& path);

}  // namespace toricres
