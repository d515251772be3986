#include "toricres/coeff_poly.hpp"

#include <algorithm>

#include "toricres/errors.hpp"

namespace toricres {

std::string default_atom_name(const Atom& a) {
  // Systems with at most 26 equations get letter names a..z with the support
  // index as subscript, matching the usual hand notation a0, b3, ...
  if (a.equation >= 0 && a.equation < 26)
    return std::string(1, static_cast<char>('a' + a.equation)) + std::to_string(a.support);
  return "u" + std::to_string(a.equation) + "_" + std::to_string(a.support);
}

CoeffPoly::CoeffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(AtomMonomial{}, c);
}

CoeffPoly CoeffPoly::atom(const Atom& a) {
  CoeffPoly p;
  p.terms_.emplace(AtomMonomial{{a, 1}}, Rational(1));
  return p;
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CoeffPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw ValidationError("CoeffPoly is not constant");
  return terms_.begin()->second;
}

int CoeffPoly::total_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [a, e] : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

std::vector<Atom> CoeffPoly::atoms() const {
  std::vector<Atom> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [a, e] : m)
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

void CoeffPoly::add_term(const AtomMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

AtomMonomial merge_monomials(const AtomMonomial& a, const AtomMonomial& b) {
  AtomMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

Rational CoeffPoly::evaluate(const AtomAssignment& values) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [a, e] : m) {
      auto it = values.find(a);
      if (it == values.end())
        throw ValidationError("no value assigned to atom " + default_atom_name(a));
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

CoeffPoly CoeffPoly::partial_evaluate(const AtomAssignment& values) const {
  CoeffPoly out;
  for (const auto& [m, c] : terms_) {
    Rational factor = c;
    AtomMonomial rest;
    for (const auto& [a, e] : m) {
      auto it = values.find(a);
      if (it == values.end()) {
        rest.emplace_back(a, e);
      } else {
        for (int k = 0; k < e; ++k) factor *= it->second;
      }
    }
    out.add_term(rest, factor);
  }
  return out;
}

std::string CoeffPoly::to_string(const AtomNamer& namer) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Rational a = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool printed = false;
    if (a != 1 || m.empty()) {
      out += toricres::to_string(a);
      printed = true;
    }
    for (const auto& [atom, e] : m) {
      if (printed) out += "*";
      out += namer(atom);
      if (e > 1) out += "^" + std::to_string(e);
      printed = true;
    }
  }
  return out;
}

}  // namespace toricres
