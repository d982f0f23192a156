#pragma once

#include <vector>

#include "rootrel/bigcomplex.hpp"
#include "rootrel/rational.hpp"

namespace rootrel::algebra {

long euler_phi(long n);
int moebius(long n);

// Coefficients of the n-th cyclotomic polynomial (exact, by repeated
// division of x^n - 1 by the lower-order cyclotomics).
std::vector<BigInt> cyclotomic_polynomial(long n);

// Elements of Q(zeta_l) as polynomials in zeta_l reduced mod Phi_l.
// Supports just enough arithmetic for character sums and idempotents.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), coeffs_(1) {}
  explicit CyclotomicNumber(long l);
  static CyclotomicNumber zeta_power(long l, long k);  // zeta_l^k
  static CyclotomicNumber from_rational(long l, const Rational& r);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    return *this = *this + o;
  }
  bool operator==(const CyclotomicNumber& o) const;

  // Galois conjugate zeta -> zeta^d, gcd(d, l) = 1.
  CyclotomicNumber conjugate(long d) const;

  // Sum of all conjugates; always rational.
  Rational trace() const;

  // Numeric embedding zeta_l = exp(2*pi*i/l) at the current working digits.
  numeric::BigComplex embed(int digits) const;

 private:
  long order_;
  std::vector<Rational> coeffs_;  // size phi(order_), basis 1..zeta^(phi-1)
  void reduce(std::vector<Rational>& raw) const;
  CyclotomicNumber promoted(long l) const;
};

// Trace of zeta_l^k from Q(zeta_l) down to Q:
//   mu(l/d) * phi(l) / phi(l/d)  with d = gcd(k, l).
Rational cyclotomic_trace(long k, long l);

}  // namespace rootrel::algebra
