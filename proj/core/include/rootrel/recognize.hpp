#pragma once

#include <optional>

#include "rootrel/bigcomplex.hpp"
#include "rootrel/rational.hpp"

namespace rootrel::numeric {

// Recovers p/q from an interval enclosure via continued fractions.  Returns
// the first convergent with denominator <= den_bound lying within 2*err of
// the center, or nullopt when the value is certifiably not such a rational
// (imaginary part bounded away from zero, or no convergent close enough).
// Precondition err < 1/(4*den_bound^2); otherwise two distinct candidates
// could fit inside the enclosure and InsufficientPrecision is thrown.
std::optional<algebra::Rational> recognize_rational(const BigComplex& x,
                                                    const algebra::BigInt& den_bound);

}  // namespace rootrel::numeric
