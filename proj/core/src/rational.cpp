#include "toricres/rational.hpp"

#include "toricres/errors.hpp"

namespace toricres {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational SpecRng::draw() {
  long num = static_cast<long>(eng_() % 20001u) - 10000;
  long den = static_cast<long>(eng_() % 100u) + 1;
  return make_rational(Integer(num), Integer(den));
}

Rational SpecRng::draw_nonzero() {
  for (;;) {
    Rational q = draw();
    if (q != 0) return q;
  }
}

}  // namespace toricres
