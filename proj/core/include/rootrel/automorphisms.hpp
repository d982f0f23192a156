#pragma once

#include <optional>
#include <vector>

#include "rootrel/group.hpp"
#include "rootrel/lll.hpp"
#include "rootrel/roots.hpp"

namespace rootrel::group {

// Automorphism group together with roots relabeled so that label i is the
// image of label 0 under elements[i]; in that labeling every element's
// action on roots equals left multiplication on element indices.
struct GaloisData {
  FiniteGroup group;
  Classification cls;
  numeric::RootList roots;
};

// Recovers the rational polynomials p_j with p_j(alpha_1) = alpha_j (by
// integer relation search), then builds the label permutation of each
// automorphism: the one sending alpha_1 to alpha_j maps root i to
// p_i(alpha_j), certified by unique disk matching.  (Evaluating p_j at
// alpha_i instead would give the opposite group: right translations rather
// than the action on roots.)  The result is validated as a regular
// permutation group.  Throws NotGalois when the minimal polynomial has
// degree < n or some p_j does not exist at the configured height cap;
// throws InsufficientPrecision instead when the height ladder has not yet
// reached that cap or disks are too fat to match, so the caller escalates.
FiniteGroup detect_automorphisms(const numeric::RootList& roots,
                                 const numeric::IntPolynomial& f, int digits,
                                 const algebra::BigInt& height_bound);

// Validates user-supplied generator permutations (0-based images over the
// sorted-root labels).  Each generator must coincide with the unique
// automorphism sending root 0 to its image under the permutation; the
// closure must act regularly.  Throws GroupMismatch when a permutation is
// not that automorphism.
FiniteGroup close_supplied_action(const std::vector<Permutation>& gens,
                                  const numeric::RootList& roots,
                                  const numeric::IntPolynomial& f, int digits,
                                  const algebra::BigInt& height_bound);

// Canonicalizes the element order via relabel_group and permutes the root
// list to match.  When sigma (and mu) are supplied they replace the
// lex-least generator choice for cyclic, S3 and D8 listings after order and
// relation checks; names that cannot be honored raise GroupMismatch.
GaloisData organize_galois_data(const FiniteGroup& g,
                                const numeric::RootList& sorted_roots,
                                const std::optional<Permutation>& named_sigma,
                                const std::optional<Permutation>& named_mu);

}  // namespace rootrel::group
