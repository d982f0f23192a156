#pragma once

#include <array>
#include <vector>

#include "rootrel/cyclotomic.hpp"
#include "rootrel/group.hpp"
#include "rootrel/groupring.hpp"

namespace rootrel::algebra {

// Degree-1 character of G, factored through the abelianization.  Values are
// zeta_l^exponent[g] with l the order of the character (the least one: the
// exponent vector has gcd(exponents, l) content 1 unless the character is
// trivial, which has l = 1).
struct CharacterDeg1 {
  long order = 1;                // l
  std::vector<long> exponent;    // k_g with chi(g) = zeta_l^{k_g}
  bool is_trivial() const { return order == 1; }
  CyclotomicNumber value(int g) const;
  CharacterDeg1 power(long d) const;  // chi^d, reduced to least order
};

// All degree-1 characters, pulled back from the abelianization; ordered
// lexicographically by exponent vector, all vectors compared at the common
// scale of the largest invariant factor.
std::vector<CharacterDeg1> degree1_characters(const group::FiniteGroup& g);

// Orbit of a character under chi -> chi^d for d coprime to the order,
// i.e. under Gal(Q(zeta_l)/Q).  The representative is the orbit member
// with lexicographically least exponent vector.
struct CharacterOrbit {
  CharacterDeg1 rep;
  std::vector<long> exponents_d;   // the d values, ascending, d=1 first
  GroupRingQ idempotent;           // C(chi): rational central idempotent
};

std::vector<CharacterOrbit> galois_orbits(
    const std::vector<CharacterDeg1>& chars, const group::FiniteGroup& g);

// C(chi) = |G|^-1 sum_g tr(chi(g^-1)) g, the sum of e_{chi^d} over the
// orbit.  Always rational.
GroupRingQ orbit_idempotent(const CharacterDeg1& chi,
                            const group::FiniteGroup& g);

// Single-character idempotent e_chi = |G|^-1 sum_g chi(g^-1) g over
// Q(zeta_l); used to cross-check the rational orbit idempotents.
GroupRingCyc character_idempotent(const CharacterDeg1& chi,
                                  const group::FiniteGroup& g);

// Degree-2 rational-irreducible data for the named nonabelian groups.
// Matrices A(g) are integral in the basis fixed by the generator listing;
// v1, v2 are matrix units (v1 v1 = v1, v1 v2 = v2, v2 v1 = 0) spanning
// the right ideal v1 Q[G] of the component whose central idempotent is
// c = v1 + sigma v2.
struct TwoDimRep {
  std::vector<std::array<Rational, 4>> matrices;  // row-major a11 a12 a21 a22
  GroupRingQ v1;
  GroupRingQ v2;
  GroupRingQ central;  // the central idempotent of the component
  int sigma;           // element indices in the canonical listing
  int mu;
};

TwoDimRep two_dim_rep(const group::FiniteGroup& g,
                      const group::Classification& cls);

}  // namespace rootrel::algebra
