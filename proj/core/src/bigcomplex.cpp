#include "rootrel/bigcomplex.hpp"

#include "rootrel/errors.hpp"

namespace rootrel::numeric {

namespace {
// Each arithmetic op adds a relative rounding slack on top of the interval
// radius so the enclosure stays valid after the floating point rounding.
BigReal slack(const BigReal& magnitude) {
  return magnitude * rounding_eps();
}
}  // namespace

BigComplex::BigComplex() : re(0), im(0), err(0) {}
BigComplex::BigComplex(BigReal real, BigReal imag)
    : re(std::move(real)), im(std::move(imag)), err(0) {}
BigComplex::BigComplex(BigReal real, BigReal imag, BigReal radius)
    : re(std::move(real)), im(std::move(imag)), err(std::move(radius)) {}

BigComplex BigComplex::from_int(long v) {
  return BigComplex(BigReal(v), BigReal(0));
}

BigComplex BigComplex::from_bigint(const algebra::BigInt& v) {
  BigComplex r(to_bigreal(v), BigReal(0));
  r.err = slack(abs(r.re));
  return r;
}

BigComplex BigComplex::from_rational(const algebra::Rational& v) {
  BigComplex r(to_bigreal(v), BigReal(0));
  r.err = slack(abs(r.re)) + rounding_eps();
  return r;
}

BigComplex BigComplex::operator-() const { return BigComplex(-re, -im, err); }

BigComplex BigComplex::conj() const { return BigComplex(re, -im, err); }

BigReal BigComplex::center_mag_upper() const {
  BigReal m = sqrt(re * re + im * im);
  return m + slack(m);
}

BigReal BigComplex::center_mag_lower() const {
  BigReal m = sqrt(re * re + im * im);
  BigReal s = m - slack(m);
  if (s < 0) return BigReal(0);
  return s;
}

BigReal BigComplex::abs_upper() const { return center_mag_upper() + err; }

BigReal BigComplex::abs_lower() const {
  BigReal v = center_mag_lower() - err;
  if (v < 0) return BigReal(0);
  return v;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a.re + b.re, a.im + b.im);
  r.err = a.err + b.err + slack(abs(r.re) + abs(r.im));
  return r;
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a.re - b.re, a.im - b.im);
  r.err = a.err + b.err + slack(abs(r.re) + abs(r.im));
  return r;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  BigReal ma = a.center_mag_upper();
  BigReal mb = b.center_mag_upper();
  // |a| |db| + |b| |da| + |da| |db|, then rounding slack.
  r.err = ma * b.err + mb * a.err + a.err * b.err + slack(ma * mb) * 4;
  return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal bl = b.abs_lower();
  if (bl <= 0) throw InsufficientPrecision("division by an interval containing zero");
  BigReal d = b.re * b.re + b.im * b.im;
  BigComplex r((a.re * b.re + a.im * b.im) / d,
               (a.im * b.re - a.re * b.im) / d);
  // Conservative quotient bound: |a/b - c| <= (|da| + |a/b| |db|) / |b|_low.
  BigReal q = a.center_mag_upper() / bl + 1;
  r.err = (a.err + q * b.err) / bl + slack(q) * 8;
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  *this = *this + o;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  *this = *this - o;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex BigComplex::scaled(const BigReal& s) const {
  BigReal as = abs(s);
  BigComplex r(re * s, im * s);
  r.err = err * as + slack((abs(re) + abs(im)) * as);
  return r;
}

std::string BigComplex::str(int digits) const {
  std::string s = to_decimal_string(re, digits);
  if (im >= 0)
    s += " + " + to_decimal_string(im, digits) + "i";
  else
    s += " - " + to_decimal_string(-im, digits) + "i";
  return s;
}

ZeroStatus zero_status(const BigComplex& v, int digits) {
  BigReal center = v.center_mag_upper();
  BigReal noise = v.err * 10;
  if (center <= noise) return ZeroStatus::Zero;
  if (center >= pow10(-(digits / 2))) return ZeroStatus::NonZero;
  return ZeroStatus::Ambiguous;
}

BigReal distance_upper(const BigComplex& a, const BigComplex& b) {
  return (a - b).abs_upper();
}

BigReal distance_lower(const BigComplex& a, const BigComplex& b) {
  return (a - b).abs_lower();
}

}  // namespace rootrel::numeric
