#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootrel/permutation.hpp"
#include "rootrel/rational.hpp"

namespace rootrel::group {

enum class GroupClass {
  Cyclic,        // one invariant factor
  Abelian,       // two or more invariant factors
  S3,
  D8,            // dihedral of order 8
  Other,
};

// A finite group of permutations acting regularly: |G| = n and the
// stabilizer of point 0 is trivial, so element index <-> point index.
// Element 0 is the identity and elements[g](0) = g by construction.
struct FiniteGroup {
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> cayley;   // cayley[a][b] = index of a*b
  std::vector<int> inverse;               // inverse[g]
  std::vector<int> element_order;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return cayley[a][b]; }
  int inv(int g) const { return inverse[g]; }
  bool is_abelian() const;
};

// Closes a generating set inside Sym(n) and checks the regularity
// conditions.  Throws NotRegular when the closure has the wrong size or a
// nontrivial point stabilizer.  Element order follows breadth-first
// discovery from the identity (later canonicalized by relabel_group).
FiniteGroup close_generators(const std::vector<Permutation>& gens, int n);

struct Classification {
  GroupClass cls;
  std::vector<long> invariant_factors;  // abelian case, ascending divisibility
  std::string name;                     // "C6", "C2xC4", "S3", "D8", "other"
  // Distinguished generators for the named nonabelian classes:
  // S3: sigma order 3, mu order 2, mu*sigma*mu = sigma^2 (lex-least pair).
  // D8: sigma order 4, mu order 2, mu*sigma*mu = sigma^3 (lex-least pair).
  int sigma = -1;
  int mu = -1;
};

Classification classify(const FiniteGroup& g);

// Reorders elements into the conventional listing for the classified type
// (cyclic powers, abelian exponent tuples, 1,s,s^2,m,sm,s^2m for S3,
// 1,s,s^2,s^3,m,sm,s^2m,s^3m for D8) and rebuilds the permutations so that
// the group again acts regularly with elements[g](0) = g.  Point relabeling
// maps old point p to new point new_of_old[p]; point 0 is fixed.  Explicit
// generator choices (element indices in g) replace the lex-least defaults
// after order and relation checks; unusable choices raise GroupMismatch.
struct Relabeling {
  FiniteGroup group;
  Classification cls;
  std::vector<int> new_of_old;  // point / element index translation
};

Relabeling relabel_group(const FiniteGroup& g, std::optional<int> sigma = {},
                         std::optional<int> mu = {});

// Quotient by the commutator subgroup together with the projection map.
struct Abelianization {
  FiniteGroup quotient;
  std::vector<int> projection;  // element of g -> element of quotient
};

Abelianization abelianization(const FiniteGroup& g);

// Invariant factors (ascending divisibility, nontrivial only) of a finite
// abelian group given by generator orders and a Cayley table.
std::vector<long> invariant_factors(const FiniteGroup& g);

// A generating tuple of an abelian group realizing its invariant factors
// as a direct product, chosen deterministically (first fit over elements
// in lexicographic permutation order).
struct AbelianDecomposition {
  std::vector<int> gens;
  std::vector<long> factors;
};

AbelianDecomposition abelian_decomposition(const FiniteGroup& g);

// Smith normal form diagonal of an integer matrix (exact).
std::vector<algebra::BigInt> smith_diagonal(
    std::vector<std::vector<algebra::BigInt>> m);

}  // namespace rootrel::group
