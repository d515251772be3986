#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toricres/rational.hpp"

namespace toricres {

// A coefficient indeterminate u_{ia}: `equation` is the index i of the
// polynomial F_i, `support` the index a of the monomial within the ordered
// support of F_i.  Atoms that do not come from an input system (e.g. user
// declared symbols attached to a query polynomial) use equation >= 0 with a
// reserved numbering chosen by the caller.
struct Atom {
  std::int32_t equation = 0;
  std::int32_t support = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using AtomPower = std::pair<Atom, int>;
// Sorted by atom, all exponents > 0.
using AtomMonomial = std::vector<AtomPower>;
using AtomAssignment = std::map<Atom, Rational>;
using AtomNamer = std::function<std::string(const Atom&)>;

std::string default_atom_name(const Atom& a);

// Sparse polynomial in the atoms u_{ia} with rational coefficients.  This is
// the base ring for all symbolic entries: matrix entries that are single
// atoms, and the coefficients of the flag determinant, which are small
// determinants of atoms.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(const Rational& c);  // NOLINT: implicit by design
  CoeffPoly(long c) : CoeffPoly(Rational(c)) {}
  static CoeffPoly atom(const Atom& a);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value when constant; throws otherwise.
  Rational constant_value() const;

  const std::map<AtomMonomial, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;
  std::vector<Atom> atoms() const;

  void add_term(const AtomMonomial& m, const Rational& c);

  CoeffPoly operator-() const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

  // Throws ValidationError when an atom has no assigned value.
  Rational evaluate(const AtomAssignment& values) const;
  // Substitutes the assigned atoms and keeps the rest symbolic.
  CoeffPoly partial_evaluate(const AtomAssignment& values) const;

  std::string to_string(const AtomNamer& namer = default_atom_name) const;

 private:
  std::map<AtomMonomial, Rational> terms_;
};

}  // namespace toricres
