#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <string>

#include "rootrel/rational.hpp"

namespace rootrel::numeric {

using BigReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Decimal working precision with an escalation schedule.  `digits` is the
// certification scale: zero tests cut at 10^(-digits/2), lattice embeddings
// scale by 10^(digits-10).  Escalation doubles `digits` up to `max_digits`.
struct PrecisionPolicy {
  int digits = 64;
  int max_digits = 1024;
  int escalation_factor = 2;

  PrecisionPolicy escalated() const {
    PrecisionPolicy p = *this;
    p.digits = std::min(max_digits, digits * escalation_factor);
    return p;
  }
  bool can_escalate() const { return digits < max_digits; }
};

// Sets the thread default MPFR precision.  Values carry their creation
// precision with them, so each pipeline attempt recomputes from exact
// inputs after calling this.
void set_working_digits(int digits);

// 10^e at the current working precision (e may be negative).
BigReal pow10(long e);

BigReal const_pi();

// Exact value of an MPFR number as a rational (mantissa * 2^exp).
algebra::Rational exact_rational(const BigReal& x);

// Conversion from exact inputs, with conservative rounding slack returned
// through `err` when requested.
BigReal to_bigreal(const algebra::Rational& q);
BigReal to_bigreal(const algebra::BigInt& n);

// Upper bound on the relative rounding error of a single arithmetic
// operation at the current working precision (a few ulps, deliberately fat).
BigReal rounding_eps();

// Decimal string with `digits` significant digits, deterministic across
// runs for equal inputs.
std::string to_decimal_string(const BigReal& x, int digits);

}  // namespace rootrel::numeric
