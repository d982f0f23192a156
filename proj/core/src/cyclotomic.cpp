#include "rootrel/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "rootrel/errors.hpp"

namespace rootrel::algebra {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

int moebius(long n) {
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

namespace {

// Exact division of integer polynomials (ascending coefficients), used
// only where divisibility is guaranteed.
std::vector<BigInt> exact_div(std::vector<BigInt> num,
                              const std::vector<BigInt>& den) {
  std::vector<BigInt> q(num.size() - den.size() + 1);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    BigInt c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const BigInt& c : num)
    if (c != 0) throw Error("inexact polynomial division");
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<BigInt>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = exact_div(std::move(num), cyclotomic_polynomial(d));
  }
  cache[n] = num;
  return num;
}

CyclotomicNumber::CyclotomicNumber(long l)
    : order_(l), coeffs_(euler_phi(l)) {
  if (l < 1) throw Error("cyclotomic order must be positive");
}

void CyclotomicNumber::reduce(std::vector<Rational>& raw) const {
  // Divide by the minimal polynomial of zeta; the remainder is the
  // canonical representative on the power basis.
  std::vector<BigInt> phi = cyclotomic_polynomial(order_);
  size_t deg = phi.size() - 1;
  while (raw.size() > deg) {
    Rational lead = raw.back();
    size_t shift = raw.size() - phi.size();
    if (lead != 0)
      for (size_t j = 0; j < phi.size(); ++j)
        raw[shift + j] -= lead * Rational(phi[j]);
    raw.pop_back();
  }
  raw.resize(deg, Rational(0));
}

CyclotomicNumber CyclotomicNumber::zeta_power(long l, long k) {
  CyclotomicNumber z(l);
  k %= l;
  if (k < 0) k += l;
  std::vector<Rational> raw(k + 1, Rational(0));
  raw[k] = 1;
  z.reduce(raw);
  z.coeffs_ = std::move(raw);
  return z;
}

CyclotomicNumber CyclotomicNumber::from_rational(long l, const Rational& r) {
  CyclotomicNumber z(l);
  z.coeffs_[0] = r;
  return z;
}

bool CyclotomicNumber::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_part() const {
  if (!is_rational()) throw Error("cyclotomic number is not rational");
  return coeffs_[0];
}

// Mixed-order arithmetic is only defined when one side is a plain
// rational (order 1); it is promoted to the other side's field.
CyclotomicNumber CyclotomicNumber::promoted(long l) const {
  if (order_ == l) return *this;
  if (order_ != 1) throw Error("cyclotomic arithmetic across different orders");
  return from_rational(l, coeffs_[0]);
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  if (order_ != o.order_) {
    long l = std::max(order_, o.order_);
    return promoted(l) + o.promoted(l);
  }
  CyclotomicNumber r(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  if (order_ != o.order_) {
    long l = std::max(order_, o.order_);
    return promoted(l) - o.promoted(l);
  }
  CyclotomicNumber r(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  if (order_ != o.order_) {
    long l = std::max(order_, o.order_);
    return promoted(l) * o.promoted(l);
  }
  std::vector<Rational> raw(coeffs_.size() + o.coeffs_.size() - 1,
                            Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  CyclotomicNumber r(order_);
  reduce(raw);
  r.coeffs_ = std::move(raw);
  return r;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  if (order_ != o.order_) {
    long l = std::max(order_, o.order_);
    if (order_ != 1 && o.order_ != 1) return false;
    return promoted(l) == o.promoted(l);
  }
  return coeffs_ == o.coeffs_;
}

CyclotomicNumber CyclotomicNumber::conjugate(long d) const {
  d %= order_;
  if (d < 0) d += order_;
  if (std::gcd(d, order_) != 1)
    throw Error("conjugation exponent not coprime to the order");
  std::vector<Rational> raw(order_, Rational(0));
  for (size_t e = 0; e < coeffs_.size(); ++e)
    raw[(e * d) % order_] += coeffs_[e];
  CyclotomicNumber r(order_);
  reduce(raw);
  r.coeffs_ = std::move(raw);
  return r;
}

Rational CyclotomicNumber::trace() const {
  CyclotomicNumber s(order_);
  for (long d = 1; d <= order_; ++d) {
    if (std::gcd(d, order_) != 1) continue;
    s = s + conjugate(d);
  }
  return s.rational_part();
}

numeric::BigComplex CyclotomicNumber::embed(int digits) const {
  using numeric::BigComplex;
  using numeric::BigReal;
  (void)digits;  // precision is ambient; the argument documents intent
  BigReal two_pi = numeric::const_pi() * 2;
  BigComplex sum;
  for (size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    BigReal angle = two_pi * BigReal(static_cast<long>(e)) / BigReal(order_);
    BigComplex z(cos(angle), sin(angle), numeric::rounding_eps() * 8);
    sum += z * BigComplex::from_rational(coeffs_[e]);
  }
  return sum;
}

Rational cyclotomic_trace(long k, long l) {
  k %= l;
  if (k < 0) k += l;
  long d = std::gcd(k, l);
  long m = l / d;
  return make_rational(BigInt(moebius(m)) * BigInt(euler_phi(l)),
                       BigInt(euler_phi(m)));
}

}  // namespace rootrel::algebra
