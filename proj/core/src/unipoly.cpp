#include "toricres/unipoly.hpp"

#include "toricres/errors.hpp"

namespace toricres {

UniPoly::UniPoly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

UniPoly UniPoly::variable() {
  UniPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

int UniPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ValidationError("UniPoly division by zero");
  UniPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.c_.back() / b.c_.back();
    if (static_cast<int>(q.c_.size()) < shift + 1) q.c_.resize(static_cast<std::size_t>(shift) + 1);
    q.c_[static_cast<std::size_t>(shift)] += f;
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r.c_[i + static_cast<std::size_t>(shift)] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw ValidationError("UniPoly exact_div: division not exact");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  Rational lead = out.c_.back();
  for (auto& c : out.c_) c /= lead;
  return out;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  UniPoly acc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    UniPoly term(pts[i].second);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      // (t - x_j) / (x_i - x_j)
      Rational d = pts[i].first - pts[j].first;
      if (d == 0) throw ValidationError("UniPoly interpolate: repeated sample point");
      UniPoly lin;
      lin += UniPoly::variable();
      lin -= UniPoly(pts[j].first);
      for (auto& c : lin.c_) c /= d;
      term = term * lin;
    }
    acc += term;
  }
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) out += toricres::to_string(a);
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace toricres
