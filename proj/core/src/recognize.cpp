#include "rootrel/recognize.hpp"

#include "rootrel/errors.hpp"

namespace rootrel::numeric {

using algebra::BigInt;
using algebra::Rational;
using algebra::make_rational;
using algebra::rational_floor;

std::optional<Rational> recognize_rational(const BigComplex& x,
                                           const BigInt& den_bound) {
  Rational window = make_rational(BigInt(1), 4 * den_bound * den_bound);
  Rational err = exact_rational(x.err);
  if (!(err < window))
    throw InsufficientPrecision("error radius too wide for denominator bound");
  if (abs(x.im) > x.err * 2) return std::nullopt;

  Rational target = exact_rational(x.re);
  Rational tol = err * 2;
  // Walk the continued fraction convergents; the window premise makes the
  // first fit the only possible fit.
  BigInt p_prev = 1, q_prev = 0;
  BigInt p = rational_floor(target), q = 1;
  Rational rest = target - Rational(p);
  while (true) {
    if (q > den_bound) return std::nullopt;
    Rational approx = make_rational(p, q);
    if (abs(target - approx) <= tol) return approx;
    if (rest == 0) return std::nullopt;
    Rational inv = Rational(1) / rest;
    BigInt a = rational_floor(inv);
    rest = inv - Rational(a);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
}

}  // namespace rootrel::numeric
