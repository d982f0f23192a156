#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootrel/characters.hpp"
#include "rootrel/groupring.hpp"
#include "rootrel/linalg.hpp"
#include "rootrel/polynomial.hpp"
#include "rootrel/roots.hpp"

namespace rootrel::relations {

using algebra::BigInt;
using algebra::Rational;

// One linear relation sum m_i * alpha_i = rhs, coefficients in root-label
// order, normalized to integers with content 1 and positive leading sign.
struct Relation {
  std::vector<BigInt> m;
  Rational rhs;
  std::string provenance;  // "trivial" / orbit id / "degree2" / "oracle"
};

struct RelationBasis {
  std::vector<Relation> relations;
  int dimension = 0;  // rank of the (m | rhs) rows; equals relations.size()
};

// Certified residual |sum m_i alpha_i - rhs| at the given roots (upper
// bound of the interval evaluation).
numeric::BigReal relation_residual(const Relation& r,
                                   const numeric::RootList& roots);

// The affine relation (1,...,1 | sum of roots) that every conjugate set
// satisfies.  The rhs is exact: power sums of the transformed roots are
// integer combinations of the power sums of f (Newton's identities), so no
// numerics are involved.  lr1_nonzero records whether the relation is
// homogeneous (trace zero), which is exactly when the trivial character
// contributes a nonzero homogeneous line.
struct TrivialResult {
  Relation relation;
  Rational trace;
  bool lr1_nonzero = false;
};

TrivialResult lr_trivial(const numeric::IntPolynomial& f,
                         const numeric::IntExpression& expr,
                         const group::FiniteGroup& g);

// Relations attached to one Galois orbit of degree-1 characters, decided by
// the vanishing test: S_d = sum_g zeta_l^{d k_g} alpha_g for every d prime
// to l.  All certified zero: returns the phi(l) relations with coefficient
// vectors tr(zeta_l^{(i-1) - k_g}), rank-verified.  Any certified nonzero:
// empty basis.  Anything in between: AmbiguousZero, asking for escalation.
RelationBasis lr_deg1(const algebra::CharacterOrbit& orbit,
                      const numeric::RootList& roots,
                      const group::FiniteGroup& g, int digits);

// The 2x2 structure matrix of the degree-2 component: entry (i,j) is the
// evaluation pairing row basis (v_i, sigma v_i) against columns, computed
// as sum_g inverse(g)(alpha) A(g).  Only the first column drives the
// decision; the rest is kept for reporting and cross-checks.
struct StructureMatrix {
  numeric::BigComplex a11, a12, a21, a22;
};

StructureMatrix structure_matrix(const algebra::TwoDimRep& rep,
                                 const numeric::RootList& roots,
                                 const group::FiniteGroup& g);

// Relations from the two-dimensional component of S3 or D8.  The decision
// reduces to whether the first structure column is proportional to a
// rational vector (a, b) with a*a11 + b*a21 = 0:
//   a11 zero, a21 nonzero  -> (a,b) = (1,0), diagnostic "oo"
//   a21 zero, a11 nonzero  -> (a,b) = (0,1), diagnostic "0"
//   both nonzero           -> recognize -a21/a11; rational r = a/b gives
//                             (a,b), irrational gives the empty basis
//   both zero              -> PrecisionExhausted (exactly impossible, so
//                             numerics have degenerated beyond repair)
// Nonempty result: the expansions of a v1 + b v2 and sigma (a v1 + b v2),
// both homogeneous, both certified.  diagnostic is a21/a11 as a rational
// string, "oo" when a11 is zero, empty when the basis is empty.
struct TwoDimResult {
  RelationBasis basis;
  std::string diagnostic;
  std::optional<std::pair<BigInt, BigInt>> ab;
  StructureMatrix structure;
};

TwoDimResult lr_2dim(const algebra::TwoDimRep& rep,
                     const numeric::RootList& roots,
                     const group::FiniteGroup& g, const BigInt& den_bound,
                     int digits);

// Stacks the trivial relation and the homogeneous component bases, checks
// exact linear independence of the (m | rhs) rows (DependentBasis on
// failure: the component spans are pairwise independent by construction,
// so a collision is a bug, not an input property).
RelationBasis assemble_lr(const TrivialResult& trivial,
                          const std::vector<RelationBasis>& parts);

// Independent check: iterated integer relation search on {alpha_1..n, 1}
// with deflation (each found relation removes one coordinate from the
// active set), yielding a full basis of the integer relation lattice up to
// the height bound.  Knows nothing about groups or characters.
RelationBasis oracle_relation_space(const numeric::RootList& roots,
                                    int digits, const BigInt& height_bound);

// Cross-checks the group-theoretic answer against the oracle: rank
// equality, exact mutual span containment, projection membership (each
// oracle relation times each component idempotent must land in that
// component's emitted span, exactly), and certified residuals for every
// emitted relation.  Direction failures where the oracle may simply have
// been run with a clamped height bound raise InsufficientPrecision when
// height_saturated is false; everything else raises SpanMismatch.
struct ComponentSpan {
  algebra::GroupRingQ idempotent;
  const RelationBasis* basis;  // emitted relations of the component
};

struct ComparisonReport {
  bool rank_equal = false;
  bool spans_equal = false;
  bool projections_ok = false;
  numeric::BigReal max_residual;       // worst certified relation residual
  numeric::BigReal max_projection_residual;
};

ComparisonReport verify_and_compare(const RelationBasis& assembled,
                                    const RelationBasis& oracle,
                                    const std::vector<ComponentSpan>& parts,
                                    const numeric::RootList& roots,
                                    const group::FiniteGroup& g, int digits,
                                    bool height_saturated);

// Shared helpers.
algebra::QMatrix relation_rows(const RelationBasis& b);  // (m | rhs) rows
Relation make_relation(std::vector<Rational> m, Rational rhs,
                       std::string provenance,
                       const numeric::RootList& roots, int digits);

}  // namespace rootrel::relations
