#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "rootrel/errors.hpp"

namespace rootrel::algebra {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// The two-argument Rational constructor mishandles negative denominators,
// so all construction from a fraction goes through here.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt rational_floor(const Rational& q);

// Parses "p", "-p" or "p/q" with optional surrounding whitespace.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_to_string(const Rational& q);

// Scales a rational vector to integers with gcd 1 and first nonzero entry
// positive; `rhs` is scaled by the same factor.  Returns false when every
// coefficient is zero.
bool normalize_relation_vector(std::vector<Rational>& m, Rational& rhs,
                               std::vector<BigInt>& out);

}  // namespace rootrel::algebra
