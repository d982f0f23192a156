#include "rootrel/rational.hpp"

#include <gmp.h>

#include <cctype>

namespace rootrel::algebra {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  return Rational(num) / Rational(den);
}

BigInt rational_floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.backend().data(),
             mpq_numref(q.backend().data()),
             mpq_denref(q.backend().data()));
  return r;
}

Rational parse_rational(const std::string& text) {
  size_t a = text.find_first_not_of(" \t");
  size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos) throw RequestError("empty rational");
  std::string t = text.substr(a, b - a + 1);
  size_t slash = t.find('/');
  auto parse_int = [](const std::string& s) -> BigInt {
    if (s.empty()) throw RequestError("malformed rational");
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw RequestError("malformed rational");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw RequestError("malformed rational: " + s);
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(t));
  return make_rational(parse_int(t.substr(0, slash)),
                       parse_int(t.substr(slash + 1)));
}

std::string rational_to_string(const Rational& q) {
  BigInt num(boost::multiprecision::numerator(q));
  BigInt den(boost::multiprecision::denominator(q));
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool normalize_relation_vector(std::vector<Rational>& m, Rational& rhs,
                               std::vector<BigInt>& out) {
  // Common denominator first, then divide out the content.
  BigInt den = 1;
  for (const Rational& x : m)
    den = lcm(den, BigInt(boost::multiprecision::denominator(x)));
  std::vector<BigInt> ints;
  ints.reserve(m.size());
  BigInt content = 0;
  for (const Rational& x : m) {
    Rational scaled = x * Rational(den);
    BigInt v(boost::multiprecision::numerator(scaled));
    ints.push_back(v);
    content = gcd(content, v);
  }
  if (content == 0) return false;
  int lead_sign = 0;
  for (const BigInt& v : ints) {
    if (v != 0) {
      lead_sign = v > 0 ? 1 : -1;
      break;
    }
  }
  BigInt divisor = content * lead_sign;
  out.clear();
  out.reserve(ints.size());
  for (const BigInt& v : ints) out.push_back(v / divisor);
  rhs = rhs * Rational(den) / Rational(divisor);
  return true;
}

}  // namespace rootrel::algebra
