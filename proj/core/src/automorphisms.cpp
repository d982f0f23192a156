#include "rootrel/automorphisms.hpp"

#include <string>
#include <utility>
#include <vector>

#include "rootrel/errors.hpp"

namespace rootrel::group {

namespace {

using algebra::BigInt;
using algebra::Rational;
using numeric::BigComplex;
using numeric::IntPolynomial;
using numeric::RootList;

// Label of the one root disk the value's disk meets.  If the value is
// exactly a root it lies in that root's disk and in no other (the disks
// are pairwise disjoint), so a unique overlap identifies it; zero or two
// overlaps mean the evaluation error is still too wide to decide.
std::optional<int> match_root(const BigComplex& v, const RootList& roots) {
  std::optional<int> hit;
  for (std::size_t t = 0; t < roots.roots.size(); ++t) {
    if (distance_lower(v, roots.roots[t]) == 0) {
      if (hit) return std::nullopt;
      hit = static_cast<int>(t);
    }
  }
  return hit;
}

// 1, a, a^2, ..., a^(count-1) for the first root a.
std::vector<BigComplex> first_root_powers(const RootList& roots, int count) {
  std::vector<BigComplex> p;
  p.reserve(count);
  p.push_back(BigComplex::from_int(1));
  for (int i = 1; i < count; ++i) p.push_back(p.back() * roots.roots[0]);
  return p;
}

// Confirms that the shortest certified relation among 1, a, ..., a^n is a
// multiple of f itself; any other outcome exhibits a proper factor of f.
// The height budget here is driven by the coefficients of f, not by the
// caller's relation height cap: the relation being hunted is f.
void require_irreducible(const RootList& roots, const IntPolynomial& f,
                         int digits, const BigInt& height_bound) {
  const int n = f.degree();
  BigInt needed(2);
  for (const BigInt& a : f.coeffs) {
    BigInt m = a < 0 ? BigInt(-a) : a;
    if (m * 2 > needed) needed = m * 2;
  }
  const BigInt cap = height_bound > needed ? height_bound : needed;
  const BigInt h = numeric::effective_height_bound(digits, n + 1, cap);
  if (h < needed)
    throw InsufficientPrecision(
        "irreducibility check needs height headroom for the coefficients");
  auto rel = numeric::integer_relation(first_root_powers(roots, n + 1),
                                       digits, h);
  if (!rel)
    throw InsufficientPrecision("minimal-polynomial relation not recovered");
  const std::vector<BigInt>& m = *rel;
  int d = n;
  while (d >= 0 && m[d] == 0) --d;
  if (d < n)
    throw NotGalois("polynomial is reducible: the first root satisfies an "
                    "equation of degree " + std::to_string(d));
  for (int i = 0; i < n; ++i)
    if (m[i] != m[n] * f.coeffs[i])
      throw NotGalois("polynomial is reducible over the rationals");
}

// The rational polynomial p_j with p_j(a) = a_j for the first root a, found
// as an integer relation among a_j, 1, a, ..., a^(n-1).  nullopt when no
// relation of the allowed height fits.
std::optional<std::vector<Rational>> defining_poly(int j, const RootList& roots,
                                                   const IntPolynomial& f,
                                                   int digits, const BigInt& h) {
  const int n = f.degree();
  std::vector<BigComplex> vals;
  vals.reserve(n + 1);
  vals.push_back(roots.roots[j]);
  for (BigComplex& p : first_root_powers(roots, n)) vals.push_back(std::move(p));
  auto rel = numeric::integer_relation(vals, digits, h);
  if (!rel || (*rel)[0] == 0) return std::nullopt;

  // c*a_j + sum b_i a^i = 0, so p(x) = -(1/c) sum b_i x^i maps a to a_j.
  std::vector<Rational> p(n);
  for (int i = 0; i < n; ++i)
    p[i] = algebra::make_rational(-(*rel)[1 + i], (*rel)[0]);
  return p;
}

BigComplex eval_poly(const std::vector<Rational>& p, const BigComplex& z) {
  BigComplex v = BigComplex::from_rational(p.back());
  for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k)
    v = v * z + BigComplex::from_rational(p[k]);
  return v;
}

// Label permutation of the automorphism sending root 1 to root j+1.  Its
// value on root i is p_i evaluated at root j+1 (the automorphism commutes
// with the rational expression of root i in terms of root 1, so it acts by
// substituting its own image of root 1).  nullopt when a certified unique
// match is not available at the current precision.
std::optional<Permutation> action_permutation(
    int j, const std::vector<std::vector<Rational>>& polys,
    const RootList& roots) {
  const int n = static_cast<int>(roots.roots.size());
  std::vector<int> img(n);
  std::vector<bool> used(n, false);
  img[0] = j;  // p_1 is the identity expression
  used[j] = true;
  for (int i = 1; i < n; ++i) {
    std::optional<int> t =
        match_root(eval_poly(polys[i], roots.roots[j]), roots);
    if (!t || used[*t]) return std::nullopt;
    used[*t] = true;
    img[i] = *t;
  }
  return Permutation(img);
}

// All defining polynomials (index 0 holds the identity expression x).
// Throws when some root is not expressible: the extension is not normal.
// `claimed` marks targets named by supplied generators, which turn into
// GroupMismatch instead of NotGalois so the caller learns whose claim broke.
std::vector<std::vector<Rational>> all_defining_polys(
    const RootList& roots, const IntPolynomial& f, int digits, const BigInt& h,
    bool saturated, const std::vector<bool>& claimed) {
  const int n = f.degree();
  std::vector<std::vector<Rational>> polys(n);
  polys[0] = {Rational(0), Rational(1)};
  for (int j = 1; j < n; ++j) {
    std::optional<std::vector<Rational>> p =
        defining_poly(j, roots, f, digits, h);
    if (p) {
      polys[j] = std::move(*p);
      continue;
    }
    if (!saturated)
      throw InsufficientPrecision("automorphism search wants a taller height "
                                  "ladder");
    if (j < static_cast<int>(claimed.size()) && claimed[j])
      throw GroupMismatch("no automorphism sends root 1 to root " +
                          std::to_string(j + 1) +
                          " as the supplied generator claims");
    throw NotGalois("no automorphism sends root 1 to root " +
                    std::to_string(j + 1) +
                    " within the height bound; the splitting field is larger "
                    "than the root field");
  }
  return polys;
}

}  // namespace

FiniteGroup detect_automorphisms(const RootList& roots, const IntPolynomial& f,
                                 int digits, const BigInt& height_bound) {
  const int n = f.degree();
  require_irreducible(roots, f, digits, height_bound);
  const BigInt h = numeric::effective_height_bound(digits, n + 1, height_bound);
  const bool saturated = h >= height_bound;

  const std::vector<std::vector<Rational>> polys =
      all_defining_polys(roots, f, digits, h, saturated, {});

  std::vector<Permutation> elements;
  elements.push_back(Permutation::identity(n));
  for (int j = 1; j < n; ++j) {
    std::optional<Permutation> p = action_permutation(j, polys, roots);
    if (!p)
      throw InsufficientPrecision(
          "automorphism images do not match root disks uniquely yet");
    elements.push_back(std::move(*p));
  }
  try {
    return close_generators(elements, n);
  } catch (const NotRegular&) {
    if (saturated)
      throw NotGalois("candidate automorphisms do not close into a regular "
                      "permutation group");
    throw InsufficientPrecision("automorphism candidates failed closure");
  }
}

FiniteGroup close_supplied_action(const std::vector<Permutation>& gens,
                                  const RootList& roots,
                                  const IntPolynomial& f, int digits,
                                  const BigInt& height_bound) {
  const int n = f.degree();
  if (gens.empty())
    throw RequestError("galois_action must name at least one generator");
  for (const Permutation& g : gens)
    if (g.size() != n)
      throw RequestError("galois_action permutation length does not match "
                         "the degree");
  require_irreducible(roots, f, digits, height_bound);
  const BigInt h = numeric::effective_height_bound(digits, n + 1, height_bound);
  const bool saturated = h >= height_bound;

  std::vector<bool> claimed(n, false);
  for (const Permutation& g : gens) claimed[g(0)] = true;
  const std::vector<std::vector<Rational>> polys =
      all_defining_polys(roots, f, digits, h, saturated, claimed);

  for (const Permutation& g : gens) {
    std::optional<Permutation> p = action_permutation(g(0), polys, roots);
    if (!p)
      throw InsufficientPrecision(
          "automorphism images do not match root disks uniquely yet");
    if (!(*p == g))
      throw GroupMismatch("supplied generator disagrees with the "
                          "automorphism determined by its image of root 1");
  }
  return close_generators(gens, n);
}

GaloisData organize_galois_data(const FiniteGroup& g,
                                const numeric::RootList& sorted_roots,
                                const std::optional<Permutation>& named_sigma,
                                const std::optional<Permutation>& named_mu) {
  auto find_element = [&g](const Permutation& p, const char* label) -> int {
    for (int i = 0; i < g.size(); ++i)
      if (g.elements[i] == p) return i;
    throw GroupMismatch(std::string(label) +
                        " is not an element of the automorphism group");
  };
  std::optional<int> si, mi;
  if (named_sigma) si = find_element(*named_sigma, "sigma");
  if (named_mu) mi = find_element(*named_mu, "mu");

  Relabeling rel = relabel_group(g, si, mi);
  GaloisData out;
  out.group = std::move(rel.group);
  out.cls = std::move(rel.cls);
  out.roots.err = sorted_roots.err;
  out.roots.digits = sorted_roots.digits;
  out.roots.roots.resize(sorted_roots.roots.size());
  for (std::size_t p = 0; p < sorted_roots.roots.size(); ++p)
    out.roots.roots[rel.new_of_old[p]] = sorted_roots.roots[p];
  return out;
}

}  // namespace rootrel::group
