#pragma once

#include <optional>
#include <vector>

#include "rootrel/bigcomplex.hpp"
#include "rootrel/rational.hpp"

namespace rootrel::numeric {

// In-place LLL reduction with delta = 99/100 over exact rational
// Gram-Schmidt data.  Rows of `basis` are the lattice generators.
void lll_reduce(std::vector<std::vector<algebra::BigInt>>& basis);

// Searches for an integer vector (m_1..m_k) with |m_i| <= height_bound and
// sum m_i * values[i] = 0, by reducing the standard relation lattice
// [I | round(S*Re v) | round(S*Im v)] with S = 10^(digits-10).  A candidate
// is accepted only if the certified interval evaluation of the combination
// has magnitude < 10^(-digits/2).  Returns nullopt when the shortest reduced
// vector fails that test (no relation of that height at this precision).
// Throws InsufficientPrecision unless 10^(digits/2) > height_bound^k, the
// working headroom needed to separate true relations from near-misses.
std::optional<std::vector<algebra::BigInt>> integer_relation(
    const std::vector<BigComplex>& values, int digits,
    const algebra::BigInt& height_bound);

// Largest height usable with integer_relation at this precision for k
// values, capped by the configured bound: 10^floor((digits/2 - 1)/k).
algebra::BigInt effective_height_bound(int digits, int k,
                                       const algebra::BigInt& cap);

}  // namespace rootrel::numeric
