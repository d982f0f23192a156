#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <rootrel/errors.hpp>
#include <rootrel/group.hpp>

#include "support.hpp"

using namespace rootrel;
using group::FiniteGroup;
using group::Permutation;

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), RequestError);
  CHECK_THROWS_AS(Permutation({0, 3}), RequestError);
  Permutation a({1, 2, 0});
  Permutation b({0, 2, 1});
  // (a*b)(i) = a(b(i)).
  CHECK((a * b).images() == std::vector<int>{1, 0, 2});
  CHECK((b * a).images() == std::vector<int>{2, 1, 0});
  CHECK(a.inverse().images() == std::vector<int>{2, 0, 1});
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK(Permutation::identity(4).order() == 1);
}

TEST_CASE("closure accepts the regular sample groups") {
  for (const auto& ng : testsupport::sample_groups()) {
    FiniteGroup g = group::close_generators(ng.gens, ng.n);
    CHECK(g.size() == ng.n);
    CHECK(g.elements[0].is_identity());
    for (int x = 0; x < g.size(); ++x) {
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.mul(g.inv(x), x) == 0);
      CHECK(g.element_order[x] == g.elements[x].order());
      for (int y = 0; y < g.size(); ++y) {
        // Cayley table consistent with permutation composition.
        CHECK(g.elements[g.mul(x, y)] == g.elements[x] * g.elements[y]);
      }
    }
  }
}

TEST_CASE("closure rejects non-regular actions") {
  // Natural S3 on three letters: closure has order 6 on 3 points.
  CHECK_THROWS_AS(group::close_generators(
                      {Permutation({1, 0, 2}), Permutation({1, 2, 0})}, 3),
                  NotRegular);
  // Right order but a nontrivial point stabilizer.
  CHECK_THROWS_AS(group::close_generators(
                      {Permutation({1, 0, 3, 2}), Permutation({0, 1, 3, 2})}, 4),
                  NotRegular);
  // Proper subgroup only.
  CHECK_THROWS_AS(group::close_generators({Permutation::identity(4)}, 4),
                  NotRegular);
}

TEST_CASE("classification names and invariant factors") {
  for (const auto& ng : testsupport::sample_groups()) {
    FiniteGroup g = group::close_generators(ng.gens, ng.n);
    group::Classification cls = group::classify(g);
    CHECK(cls.name == ng.name);
    if (ng.name == "C2xC2") {
      CHECK(cls.invariant_factors == std::vector<long>{2, 2});
    } else if (ng.name == "C2xC4") {
      CHECK(cls.invariant_factors == std::vector<long>{2, 4});
    } else if (ng.name[0] == 'C') {
      CHECK(cls.invariant_factors ==
            std::vector<long>{static_cast<long>(ng.n)});
    } else {
      // S3 / D8: distinguished generators with the dihedral relation.
      REQUIRE(cls.sigma >= 0);
      REQUIRE(cls.mu >= 0);
      int rot = ng.n == 6 ? 3 : 4;
      CHECK(g.element_order[cls.sigma] == rot);
      CHECK(g.element_order[cls.mu] == 2);
      CHECK(g.mul(cls.mu, g.mul(cls.sigma, cls.mu)) == g.inv(cls.sigma));
    }
  }
}

TEST_CASE("relabeling gives the normative listing") {
  for (const auto& ng : testsupport::sample_groups()) {
    FiniteGroup raw = group::close_generators(ng.gens, ng.n);
    group::Relabeling rel = group::relabel_group(raw);
    const FiniteGroup& g = rel.group;
    REQUIRE(g.size() == ng.n);
    CHECK(g.elements[0].is_identity());
    for (int x = 0; x < g.size(); ++x) CHECK(g.elements[x](0) == x);
    // Left multiplication on indices equals the permutation action.
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        CHECK(g.elements[x](y) == g.mul(x, y));

    // new_of_old is an isomorphism from the raw copy.
    const std::vector<int>& f = rel.new_of_old;
    for (int a = 0; a < raw.size(); ++a)
      for (int b = 0; b < raw.size(); ++b)
        CHECK(g.mul(f[a], f[b]) == f[raw.mul(a, b)]);

    if (rel.cls.cls == group::GroupClass::Cyclic) {
      // Listing by powers of the generator.
      for (int k = 0; k + 1 < g.size(); ++k) CHECK(g.mul(k, 1) == k + 1);
    }
    if (ng.name == "S3") {
      std::vector<int> orders;
      for (int x = 0; x < 6; ++x) orders.push_back(g.element_order[x]);
      CHECK(orders == std::vector<int>{1, 3, 3, 2, 2, 2});
      CHECK(rel.cls.sigma == 1);
      CHECK(rel.cls.mu == 3);
      CHECK(g.mul(3, g.mul(1, 3)) == g.inv(1));
      // Listing 1, s, s^2, m, sm, s^2m.
      CHECK(g.mul(1, 3) == 4);
      CHECK(g.mul(g.mul(1, 1), 3) == 5);
    }
    if (ng.name == "D8") {
      std::vector<int> orders;
      for (int x = 0; x < 8; ++x) orders.push_back(g.element_order[x]);
      CHECK(orders == std::vector<int>{1, 4, 2, 4, 2, 2, 2, 2});
      CHECK(rel.cls.sigma == 1);
      CHECK(rel.cls.mu == 4);
      CHECK(g.mul(4, g.mul(1, 4)) == g.inv(1));
      // Listing 1, s, s^2, s^3, m, sm, s^2m, s^3m.
      CHECK(g.mul(1, 4) == 5);
      CHECK(g.mul(2, 4) == 6);
      CHECK(g.mul(3, 4) == 7);
    }
  }
}

TEST_CASE("explicit generator pinning") {
  auto groups = testsupport::sample_groups();
  auto s3 = std::find_if(groups.begin(), groups.end(),
                         [](const auto& ng) { return ng.name == "S3"; });
  REQUIRE(s3 != groups.end());
  FiniteGroup raw = group::close_generators(s3->gens, s3->n);

  // Pick the other rotation as sigma: relabeling must honor it.
  int other_rot = -1, refl = -1;
  group::Relabeling def = group::relabel_group(raw);
  for (int x = 0; x < raw.size(); ++x) {
    if (raw.element_order[x] == 3 && x != def.cls.sigma) other_rot = x;
    if (raw.element_order[x] == 2) refl = x;
  }
  REQUIRE(other_rot >= 0);
  group::Relabeling pinned = group::relabel_group(raw, other_rot, refl);
  // After relabeling sigma sits at index 1 and equals the pinned element.
  CHECK(pinned.new_of_old[other_rot] == 1);
  CHECK(pinned.new_of_old[refl] == 3);

  // Pinning a reflection as sigma is an order violation.
  CHECK_THROWS_AS(group::relabel_group(raw, refl, refl), GroupMismatch);
}

TEST_CASE("abelianization") {
  auto groups = testsupport::sample_groups();
  for (const auto& ng : groups) {
    FiniteGroup g = group::close_generators(ng.gens, ng.n);
    group::Abelianization ab = group::abelianization(g);
    if (ng.name == "S3") CHECK(ab.quotient.size() == 2);
    if (ng.name == "D8") {
      CHECK(ab.quotient.size() == 4);
      CHECK(group::invariant_factors(ab.quotient) ==
            std::vector<long>{2, 2});
    }
    if (ng.name[0] == 'C' && ng.name.size() == 2)
      CHECK(ab.quotient.size() == ng.n);
    // Projection is a surjective homomorphism.
    std::set<int> image;
    for (int a = 0; a < g.size(); ++a) {
      image.insert(ab.projection[a]);
      for (int b = 0; b < g.size(); ++b)
        CHECK(ab.projection[g.mul(a, b)] ==
              ab.quotient.mul(ab.projection[a], ab.projection[b]));
    }
    CHECK(static_cast<int>(image.size()) == ab.quotient.size());
  }
}

TEST_CASE("abelian decomposition realizes the invariant factors") {
  for (const auto& ng : testsupport::sample_groups()) {
    FiniteGroup g = group::close_generators(ng.gens, ng.n);
    if (!g.is_abelian()) continue;
    group::AbelianDecomposition dec = group::abelian_decomposition(g);
    REQUIRE(dec.gens.size() == dec.factors.size());
    long prod = 1;
    for (size_t i = 0; i < dec.gens.size(); ++i) {
      CHECK(g.element_order[dec.gens[i]] == dec.factors[i]);
      if (i + 1 < dec.factors.size())
        CHECK(dec.factors[i + 1] % dec.factors[i] == 0);
      prod *= dec.factors[i];
    }
    CHECK(prod == g.size());
    // The product map over exponent tuples hits every element once.
    std::set<int> seen;
    std::vector<long> idx(dec.gens.size(), 0);
    for (long count = 0; count < prod; ++count) {
      int e = 0;
      for (size_t i = 0; i < dec.gens.size(); ++i)
        for (long k = 0; k < idx[i]; ++k) e = g.mul(e, dec.gens[i]);
      seen.insert(e);
      for (size_t i = 0; i < idx.size(); ++i) {
        if (++idx[i] < dec.factors[i]) break;
        idx[i] = 0;
      }
    }
    CHECK(static_cast<int>(seen.size()) == g.size());
  }
}

TEST_CASE("smith diagonal") {
  using algebra::BigInt;
  auto smith = [](std::vector<std::vector<long>> rows) {
    std::vector<std::vector<BigInt>> m;
    for (auto& r : rows) {
      m.emplace_back();
      for (long x : r) m.back().emplace_back(x);
    }
    return group::smith_diagonal(m);
  };
  // Zero invariant factors are dropped: only the nonzero chain comes back.
  CHECK(smith({{1, 2}, {3, 4}}) == std::vector<BigInt>{1, 2});
  CHECK(smith({{2, 0}, {0, 4}}) == std::vector<BigInt>{2, 4});
  CHECK(smith({{4, 0}, {0, 2}}) == std::vector<BigInt>{2, 4});
  CHECK(smith({{2, 4}, {4, 8}}) == std::vector<BigInt>{2});
  CHECK(smith({{0, 0}, {0, 0}}).empty());
  CHECK(smith({{6, 4}, {4, 6}}) == std::vector<BigInt>{2, 10});

  // Divisibility chain on random matrices.
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<BigInt>> m(3, std::vector<BigInt>(3));
    for (auto& r : m)
      for (auto& x : r) x = testsupport::rand_long(rng, -9, 9);
    std::vector<BigInt> d = group::smith_diagonal(m);
    CHECK(d.size() <= 3);
    for (size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] > 0);
      if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
    }
  }
}
