#include <doctest.h>

#include <array>
#include <numeric>
#include <set>
#include <vector>

#include <rootrel/characters.hpp>
#include <rootrel/groupring.hpp>

#include "support.hpp"

using namespace rootrel;
using algebra::CharacterDeg1;
using algebra::CharacterOrbit;
using algebra::CyclotomicNumber;
using algebra::GroupRingCyc;
using algebra::GroupRingQ;
using algebra::Rational;
using group::FiniteGroup;

namespace {

struct GroupFixture {
  std::string name;
  group::Relabeling rel;
};

std::vector<GroupFixture> fixtures() {
  std::vector<GroupFixture> out;
  for (const auto& ng : testsupport::sample_groups())
    out.push_back({ng.name, testsupport::canonical_group(ng)});
  return out;
}

GroupRingCyc cyc_basis(const FiniteGroup& g, int idx, long l) {
  GroupRingCyc e(&g);
  e[idx] = CyclotomicNumber::from_rational(l, 1);
  return e;
}

// 2x2 rational matrix helpers for the degree-2 representation.
using Mat2 = std::array<Rational, 4>;
Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_CASE("degree-1 characters are the abelianization duals") {
  for (const auto& fx : fixtures()) {
    const FiniteGroup& g = fx.rel.group;
    auto chars = algebra::degree1_characters(g);
    int expected = g.size();
    if (fx.name == "S3") expected = 2;
    if (fx.name == "D8") expected = 4;
    CHECK(static_cast<int>(chars.size()) == expected);
    CHECK(chars[0].is_trivial());

    std::set<std::vector<long>> seen;
    for (const auto& chi : chars) {
      CHECK(static_cast<int>(chi.exponent.size()) == g.size());
      CHECK(chi.exponent[0] == 0);
      seen.insert(chi.exponent);
      // Homomorphism property, exact.
      for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
          CHECK(chi.value(g.mul(a, b)) == chi.value(a) * chi.value(b));
      // Order is minimal: the exponents generate Z/l.
      if (!chi.is_trivial()) {
        long content = chi.order;
        for (long e : chi.exponent) content = std::gcd(content, e);
        CHECK(content == 1);
      }
    }
    CHECK(seen.size() == chars.size());
  }
}

TEST_CASE("character powers reduce to least order") {
  auto groups = testsupport::sample_groups();
  auto c6 = group::relabel_group(
      group::close_generators(groups[4].gens, 6));  // C6
  auto chars = algebra::degree1_characters(c6.group);
  REQUIRE(chars.size() == 6);
  for (const auto& chi : chars) {
    if (chi.order != 6) continue;
    CHECK(chi.power(1).order == 6);
    CHECK(chi.power(2).order == 3);
    CHECK(chi.power(3).order == 2);
    CHECK(chi.power(6).order == 1);
    CHECK(chi.power(7).order == 6);
    // chi^d evaluates as the d-th power pointwise.
    for (int x = 0; x < 6; ++x)
      CHECK(chi.power(5).value(x) ==
            chi.value(x) * chi.value(x) * chi.value(x) * chi.value(x) *
                chi.value(x));
  }
}

TEST_CASE("galois orbits partition the characters") {
  for (const auto& fx : fixtures()) {
    const FiniteGroup& g = fx.rel.group;
    auto chars = algebra::degree1_characters(g);
    auto orbits = algebra::galois_orbits(chars, g);
    size_t total = 0;
    for (const auto& o : orbits) {
      total += o.exponents_d.size();
      CHECK(o.exponents_d[0] == 1);
      CHECK(static_cast<long>(o.exponents_d.size()) ==
            algebra::euler_phi(o.rep.order));
      for (long d : o.exponents_d) CHECK(std::gcd(d, o.rep.order) == 1L);
    }
    CHECK(total == chars.size());
    if (fx.name == "C6") {
      CHECK(orbits.size() == 4);
      std::multiset<size_t> sizes;
      for (const auto& o : orbits) sizes.insert(o.exponents_d.size());
      CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2});
    }
    if (fx.name == "S3") CHECK(orbits.size() == 2);
    if (fx.name == "D8") CHECK(orbits.size() == 4);
  }
}

TEST_CASE("orbit idempotents are orthogonal and sum to one") {
  for (const auto& fx : fixtures()) {
    const FiniteGroup& g = fx.rel.group;
    auto chars = algebra::degree1_characters(g);
    auto orbits = algebra::galois_orbits(chars, g);

    GroupRingQ sum(&g);
    for (const auto& o : orbits) {
      CHECK(o.idempotent * o.idempotent == o.idempotent);
      sum = sum + o.idempotent;
    }
    for (size_t i = 0; i < orbits.size(); ++i)
      for (size_t j = i + 1; j < orbits.size(); ++j)
        CHECK((orbits[i].idempotent * orbits[j].idempotent).is_zero());

    // The trivial orbit idempotent is the averaging element.
    CHECK(orbits[0].idempotent == algebra::ring_delta(g));

    if (fx.name == "S3" || fx.name == "D8") {
      auto rep = algebra::two_dim_rep(g, fx.rel.cls);
      CHECK(rep.central * rep.central == rep.central);
      for (const auto& o : orbits)
        CHECK((rep.central * o.idempotent).is_zero());
      CHECK(sum + rep.central == algebra::ring_one(g));
    } else {
      CHECK(sum == algebra::ring_one(g));
    }
  }
}

TEST_CASE("single character idempotents refine the orbit idempotents") {
  for (const auto& fx : fixtures()) {
    const FiniteGroup& g = fx.rel.group;
    auto chars = algebra::degree1_characters(g);
    auto orbits = algebra::galois_orbits(chars, g);
    for (const auto& o : orbits) {
      long l = o.rep.order;
      // e_chi is idempotent and h e_chi = chi(h) e_chi.
      GroupRingCyc e = algebra::character_idempotent(o.rep, g);
      CHECK(e * e == e);
      for (int h = 0; h < g.size(); ++h)
        CHECK(cyc_basis(g, h, l) * e == e.scaled(o.rep.value(h)));

      // Summing e_{chi^d} over the orbit recovers the rational idempotent.
      GroupRingCyc acc(&g);
      for (long d : o.exponents_d)
        acc = acc + algebra::character_idempotent(o.rep.power(d), g);
      for (int h = 0; h < g.size(); ++h) {
        REQUIRE(acc[h].is_rational());
        CHECK(acc[h].rational_part() == o.idempotent[h]);
      }
    }
  }
}

TEST_CASE("two dimensional representation") {
  for (const auto& fx : fixtures()) {
    if (fx.name != "S3" && fx.name != "D8") continue;
    const FiniteGroup& g = fx.rel.group;
    auto rep = algebra::two_dim_rep(g, fx.rel.cls);
    REQUIRE(static_cast<int>(rep.matrices.size()) == g.size());
    CHECK(rep.sigma == fx.rel.cls.sigma);
    CHECK(rep.mu == fx.rel.cls.mu);

    // A is a homomorphism with A(1) = I.
    CHECK(rep.matrices[0] == Mat2{1, 0, 0, 1});
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b)
        CHECK(rep.matrices[g.mul(a, b)] ==
              mat_mul(rep.matrices[a], rep.matrices[b]));

    // Matrix units: with v11 = v1, v12 = s v1, v21 = v2, v22 = s v2,
    // the products satisfy v_ij v_kl = [i == l] v_kj.
    GroupRingQ s = algebra::basis_element(g, rep.sigma);
    std::array<std::array<GroupRingQ, 2>, 2> v;
    v[0][0] = rep.v1;
    v[0][1] = s * rep.v1;
    v[1][0] = rep.v2;
    v[1][1] = s * rep.v2;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            GroupRingQ prod = v[i][j] * v[k][l];
            if (i == l)
              CHECK(prod == v[k][j]);
            else
              CHECK(prod.is_zero());
          }

    // Central idempotent of the component.
    CHECK(rep.central == rep.v1 + v[1][1]);
    CHECK(rep.central * rep.central == rep.central);
    for (int h = 0; h < g.size(); ++h) {
      GroupRingQ b = algebra::basis_element(g, h);
      CHECK(b * rep.central == rep.central * b);
    }

    // g acting on the row (v_i, s v_i) multiplies by A(g) on the right.
    for (int h = 0; h < g.size(); ++h) {
      const Mat2& m = rep.matrices[h];
      GroupRingQ b = algebra::basis_element(g, h);
      for (int i = 0; i < 2; ++i) {
        GroupRingQ lhs1 = b * v[i][0];
        CHECK(lhs1 == v[i][0].scaled(m[0]) + v[i][1].scaled(m[2]));
        GroupRingQ lhs2 = b * v[i][1];
        CHECK(lhs2 == v[i][0].scaled(m[1]) + v[i][1].scaled(m[3]));
      }
    }
  }
}
