#include "rootrel/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "rootrel/errors.hpp"

namespace rootrel::algebra {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CyclotomicNumber CharacterDeg1::value(int g) const {
  return CyclotomicNumber::zeta_power(order, exponent[g]);
}

CharacterDeg1 CharacterDeg1::power(long d) const {
  std::vector<long> k(exponent.size());
  long content = order;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    k[i] = mod(d * exponent[i], order);
    content = std::gcd(content, k[i]);
  }
  CharacterDeg1 r;
  r.order = order / content;
  r.exponent.resize(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) r.exponent[i] = k[i] / content;
  return r;
}

std::vector<CharacterDeg1> degree1_characters(const group::FiniteGroup& g) {
  group::Abelianization ab = group::abelianization(g);
  const group::FiniteGroup& q = ab.quotient;
  group::AbelianDecomposition dec = group::abelian_decomposition(q);
  const int r = static_cast<int>(dec.gens.size());
  const long big = dec.factors.empty() ? 1 : dec.factors.back();

  // Exponent tuple of every quotient element over the decomposition basis,
  // filled by walking the full product odometer.
  std::vector<std::vector<long>> tuple(q.size());
  {
    std::vector<long> t(r, 0);
    while (true) {
      int e = 0;
      for (int i = 0; i < r; ++i)
        for (long p = 0; p < t[i]; ++p) e = q.mul(e, dec.gens[i]);
      tuple[e] = t;
      int i = 0;
      while (i < r && ++t[i] >= dec.factors[i]) t[i++] = 0;
      if (i == r) break;
    }
  }

  // One character per exponent tuple c: chi(q) = zeta_big^(sum of
  // c_i t_i(q) big/d_i), pulled back along the projection and reduced to
  // its least order.  The common-scale exponent vector doubles as the
  // deterministic sort key.
  struct Keyed {
    std::vector<long> key;
    CharacterDeg1 chi;
  };
  std::vector<Keyed> all;
  std::vector<long> c(r, 0);
  while (true) {
    std::vector<long> kq(q.size());
    for (int e = 0; e < q.size(); ++e) {
      long s = 0;
      for (int i = 0; i < r; ++i)
        s = mod(s + c[i] * tuple[e][i] * (big / dec.factors[i]), big);
      kq[e] = s;
    }
    Keyed rec;
    rec.key.resize(g.size());
    long content = big;
    for (int h = 0; h < g.size(); ++h) {
      rec.key[h] = kq[ab.projection[h]];
      content = std::gcd(content, rec.key[h]);
    }
    rec.chi.order = big / content;
    rec.chi.exponent.resize(g.size());
    for (int h = 0; h < g.size(); ++h) rec.chi.exponent[h] = rec.key[h] / content;
    all.push_back(std::move(rec));
    if (r == 0) break;
    int i = 0;
    while (i < r && ++c[i] >= dec.factors[i]) c[i++] = 0;
    if (i == r) break;
  }

  std::sort(all.begin(), all.end(),
            [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
  std::vector<CharacterDeg1> out;
  out.reserve(all.size());
  for (Keyed& rec : all) out.push_back(std::move(rec.chi));
  return out;
}

std::vector<CharacterOrbit> galois_orbits(
    const std::vector<CharacterDeg1>& chars, const group::FiniteGroup& g) {
  std::map<std::pair<long, std::vector<long>>, int> index;
  for (std::size_t i = 0; i < chars.size(); ++i)
    index[{chars[i].order, chars[i].exponent}] = static_cast<int>(i);

  std::vector<bool> seen(chars.size(), false);
  std::vector<CharacterOrbit> out;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (seen[i]) continue;
    CharacterOrbit orb;
    orb.rep = chars[i];
    const long l = chars[i].order;
    for (long d = 1; d <= l; ++d) {
      if (std::gcd(d, l) != 1) continue;
      CharacterDeg1 p = chars[i].power(d);
      auto it = index.find({p.order, p.exponent});
      if (it == index.end()) throw Error("character orbit leaves the list");
      seen[it->second] = true;
      orb.exponents_d.push_back(d);
    }
    orb.idempotent = orbit_idempotent(orb.rep, g);
    out.push_back(std::move(orb));
  }
  return out;
}

GroupRingQ orbit_idempotent(const CharacterDeg1& chi,
                            const group::FiniteGroup& g) {
  GroupRingQ r(&g);
  const Rational inv_n = make_rational(1, g.size());
  for (int h = 0; h < g.size(); ++h)
    r[h] = cyclotomic_trace(-chi.exponent[h], chi.order) * inv_n;
  return r;
}

GroupRingCyc character_idempotent(const CharacterDeg1& chi,
                                  const group::FiniteGroup& g) {
  GroupRingCyc r(&g);
  const CyclotomicNumber inv_n =
      CyclotomicNumber::from_rational(chi.order, make_rational(1, g.size()));
  for (int h = 0; h < g.size(); ++h)
    r[h] = CyclotomicNumber::zeta_power(chi.order, -chi.exponent[h]) * inv_n;
  return r;
}

TwoDimRep two_dim_rep(const group::FiniteGroup& g,
                      const group::Classification& cls) {
  auto M = [](long a, long b, long c, long d) {
    return std::array<Rational, 4>{Rational(a), Rational(b), Rational(c),
                                   Rational(d)};
  };
  TwoDimRep rep;
  const Rational z(0);
  if (cls.cls == group::GroupClass::S3) {
    if (g.size() != 6 || cls.sigma != 1 || cls.mu != 3)
      throw Error("degree-2 data needs the canonical listing of S3");
    rep.sigma = 1;
    rep.mu = 3;
    rep.matrices = {M(1, 0, 0, 1),   M(0, -1, 1, -1), M(-1, 1, -1, 0),
                    M(0, 1, 1, 0),   M(-1, 0, -1, 1), M(1, -1, 0, -1)};
    const Rational t = make_rational(1, 3);
    rep.v1 = GroupRingQ(&g, {t, -t, z, z, -t, t});
    rep.v2 = GroupRingQ(&g, {z, -t, t, t, -t, z});
    rep.central = GroupRingQ(&g, {t + t, -t, -t, z, z, z});
  } else if (cls.cls == group::GroupClass::D8) {
    if (g.size() != 8 || cls.sigma != 1 || cls.mu != 4)
      throw Error("degree-2 data needs the canonical listing of D8");
    rep.sigma = 1;
    rep.mu = 4;
    rep.matrices = {M(1, 0, 0, 1),  M(0, -1, 1, 0),  M(-1, 0, 0, -1),
                    M(0, 1, -1, 0), M(0, 1, 1, 0),   M(-1, 0, 0, 1),
                    M(0, -1, -1, 0), M(1, 0, 0, -1)};
    const Rational t = make_rational(1, 4);
    rep.v1 = GroupRingQ(&g, {t, z, -t, z, z, -t, z, t});
    rep.v2 = GroupRingQ(&g, {z, -t, z, t, t, z, -t, z});
    rep.central = GroupRingQ(&g, {t + t, z, -(t + t), z, z, z, z, z});
  } else {
    throw UnsupportedGroup("no two-dimensional component data for " +
                           cls.name);
  }
  return rep;
}

}  // namespace rootrel::algebra
