#pragma once

#include <vector>

#include "rootrel/bigcomplex.hpp"
#include "rootrel/polynomial.hpp"

namespace rootrel::numeric {

// All conjugate roots of a squarefree monic polynomial at a shared error
// radius, sorted by (real part descending, imaginary part descending).
// Labels are 1-based in the rest of the library; index i here is label i+1.
struct RootList {
  std::vector<BigComplex> roots;
  BigReal err;     // shared radius: every root disk has this radius
  int digits = 0;  // working digits the list was certified at
};

// Companion-matrix eigenvalues refined by simultaneous Newton corrections
// (Aberth-Ehrlich), then certified: each approximation carries a disk that
// provably contains a root, and the disks are pairwise disjoint with
// separation > 4*err.  Escalates digits internally up to policy.max_digits;
// throws NotSquarefree or PrecisionExhausted.
RootList find_roots(const IntPolynomial& f, const PrecisionPolicy& policy);

// Applies an integer polynomial expression elementwise.  The result keeps
// the source ordering (labels transport along the field embedding); the
// separation certificate is re-checked and InsufficientPrecision is thrown
// when the transformed disks overlap.  Whether a collision is genuine
// (expression not injective on the conjugates) is decided exactly,
// beforehand, by transform_is_injective.
RootList transform_roots(const RootList& base, const IntExpression& expr,
                         int digits);

}  // namespace rootrel::numeric
