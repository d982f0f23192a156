#include "rootrel/bigfloat.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace rootrel::numeric {

void set_working_digits(int digits) {
  if (digits < 8) digits = 8;
  // Ten guard digits beyond the certification scale.
  BigReal::default_precision(static_cast<unsigned>(digits) + 10);
}

BigReal pow10(long e) {
  BigReal ten(10);
  BigReal r(1);
  long n = e < 0 ? -e : e;
  BigReal base = ten;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  if (e < 0) return BigReal(1) / r;
  return r;
}

BigReal const_pi() {
  BigReal x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

algebra::Rational exact_rational(const BigReal& x) {
  if (x == 0) return algebra::Rational(0);
  mpz_t mant;
  mpz_init(mant);
  mpfr_exp_t e = mpfr_get_z_2exp(mant, x.backend().data());
  algebra::BigInt m;
  mpz_set(m.backend().data(), mant);
  mpz_clear(mant);
  algebra::Rational r(m);
  algebra::BigInt two_abs = algebra::BigInt(1) << (e < 0 ? -e : e);
  if (e >= 0) return r * algebra::Rational(two_abs);
  return r / algebra::Rational(two_abs);
}

BigReal to_bigreal(const algebra::Rational& q) {
  BigReal num(boost::multiprecision::numerator(q).str());
  BigReal den(boost::multiprecision::denominator(q).str());
  return num / den;
}

BigReal to_bigreal(const algebra::BigInt& n) { return BigReal(n.str()); }

BigReal rounding_eps() {
  unsigned digits = BigReal::default_precision();
  return pow10(-static_cast<long>(digits) + 2);
}

std::string to_decimal_string(const BigReal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

}  // namespace rootrel::numeric
