#pragma once

#include "rootrel/bigfloat.hpp"
#include "rootrel/rational.hpp"

namespace rootrel::numeric {

// Complex number with an attached error radius: the represented value lies
// within `err` of re + im*i.  Every operation propagates radii outward and
// adds rounding slack, so a radius is always a true enclosure.
class BigComplex {
 public:
  BigReal re, im, err;

  BigComplex();
  BigComplex(BigReal real, BigReal imag);
  BigComplex(BigReal real, BigReal imag, BigReal radius);

  static BigComplex from_int(long v);
  static BigComplex from_bigint(const algebra::BigInt& v);
  static BigComplex from_rational(const algebra::Rational& v);

  BigComplex operator-() const;
  BigComplex conj() const;

  // Center magnitude bounds (error radius not included).
  BigReal center_mag_upper() const;
  BigReal center_mag_lower() const;

  // |value| bounds including the radius.
  BigReal abs_upper() const;
  BigReal abs_lower() const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  // Throws InsufficientPrecision when the divisor interval straddles zero.
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);

  BigComplex scaled(const BigReal& s) const;

  std::string str(int digits) const;
};

enum class ZeroStatus { Zero, NonZero, Ambiguous };

// Two-band zero test: certified zero below the noise floor (10x the
// accumulated radius), certified nonzero at or above 10^(-digits/2),
// ambiguous in between (caller escalates precision).
ZeroStatus zero_status(const BigComplex& v, int digits);

// Distance |a - b| bounds.
BigReal distance_upper(const BigComplex& a, const BigComplex& b);
BigReal distance_lower(const BigComplex& a, const BigComplex& b);

}  // namespace rootrel::numeric
