#include "rootrel/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rootrel/errors.hpp"

namespace rootrel::group {

using algebra::BigInt;

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (cayley[a][b] != cayley[b][a]) return false;
  return true;
}

namespace {

// Rebuilds the index tables after `elements` has been fixed: requires the
// regular normalization elements[i](0) == i to already hold.
void build_tables(FiniteGroup& g) {
  int n = g.size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[g.elements[i].images()] = i;
  g.cayley.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find((g.elements[a] * g.elements[b]).images());
      if (it == index.end()) throw NotRegular("set not closed under composition");
      g.cayley[a][b] = it->second;
    }
  g.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    auto it = index.find(g.elements[a].inverse().images());
    if (it == index.end()) throw NotRegular("set not closed under inversion");
    g.inverse[a] = it->second;
  }
  g.element_order.assign(n, 0);
  for (int a = 0; a < n; ++a) g.element_order[a] = g.elements[a].order();
}

}  // namespace

FiniteGroup close_generators(const std::vector<Permutation>& gens, int n) {
  for (const Permutation& p : gens)
    if (p.size() != n) throw NotRegular("generator degree mismatch");
  std::vector<Permutation> closure{Permutation::identity(n)};
  std::map<std::vector<int>, int> seen{{closure[0].images(), 0}};
  for (size_t head = 0; head < closure.size(); ++head) {
    for (const Permutation& gen : gens) {
      Permutation w = closure[head] * gen;
      if (seen.emplace(w.images(), closure.size()).second) {
        closure.push_back(w);
        if (static_cast<int>(closure.size()) > n)
          throw NotRegular("closure larger than the number of roots");
      }
    }
  }
  if (static_cast<int>(closure.size()) != n)
    throw NotRegular("closure smaller than the number of roots");
  // Regularity: evaluation at point 0 must be a bijection, which also
  // gives the normalized element order.
  std::vector<int> by_point(n, -1);
  for (int i = 0; i < n; ++i) {
    int p = closure[i](0);
    if (by_point[p] != -1)
      throw NotRegular("point stabilizer is nontrivial");
    by_point[p] = i;
  }
  FiniteGroup g;
  for (int p = 0; p < n; ++p) g.elements.push_back(closure[by_point[p]]);
  build_tables(g);
  return g;
}

namespace {

// Lexicographically least permutation among elements of the given order;
// deterministic regardless of how the group was generated.
int lex_least_of_order(const FiniteGroup& g, int order,
                       const std::vector<int>& exclude = {}) {
  int best = -1;
  for (int i = 0; i < g.size(); ++i) {
    if (g.element_order[i] != order) continue;
    if (std::find(exclude.begin(), exclude.end(), i) != exclude.end()) continue;
    if (best == -1 || g.elements[i] < g.elements[best]) best = i;
  }
  return best;
}

std::vector<int> lex_sorted_indices(const FiniteGroup& g) {
  std::vector<int> idx(g.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return g.elements[a] < g.elements[b];
  });
  return idx;
}

// First (in element lex order) tuple whose orders match the invariant
// factors and whose power products enumerate the whole group.
AbelianDecomposition abelian_basis(const FiniteGroup& g,
                                   const std::vector<long>& factors) {
  std::vector<int> lex = lex_sorted_indices(g);
  size_t k = factors.size();
  if (k == 0) {
    if (g.size() != 1) throw Error("empty factor list for a nontrivial group");
    return {};
  }
  std::vector<int> chosen;

  // Depth-first over lex-ordered candidates; the first full tuple that
  // generates the group as a direct product wins.
  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == k) {
      std::vector<bool> hit(g.size(), false);
      long total = 1;
      for (long f : factors) total *= f;
      if (total != g.size()) return false;
      // Enumerate all exponent combinations.
      std::vector<long> exps(k, 0);
      while (true) {
        int e = 0;
        for (size_t i = 0; i < k; ++i)
          for (long t = 0; t < exps[i]; ++t) e = g.mul(e, chosen[i]);
        if (hit[e]) return false;
        hit[e] = true;
        size_t i = k;
        while (i > 0) {
          --i;
          if (++exps[i] < factors[i]) break;
          exps[i] = 0;
          if (i == 0) {
            for (bool h : hit)
              if (!h) return false;
            return true;
          }
        }
      }
    }
    for (int idx : lex) {
      if (g.element_order[idx] != factors[depth]) continue;
      chosen.push_back(idx);
      if (rec(depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0)) throw Error("no abelian basis found for the invariant factors");
  AbelianDecomposition b;
  b.gens = chosen;
  b.factors = factors;
  return b;
}

}  // namespace

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // Find the smallest nonzero entry in the remaining block.
    size_t pr = rows, pc = cols;
    for (size_t i = r0; i < rows; ++i)
      for (size_t j = c0; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pr == rows || abs(m[i][j]) < abs(m[pr][pc])))
          pr = i, pc = j;
    if (pr == rows) break;
    std::swap(m[r0], m[pr]);
    for (size_t i = r0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = true;
    for (size_t i = r0 + 1; i < rows; ++i) {
      BigInt q = m[i][c0] / m[r0][c0];
      if (q != 0)
        for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
      if (m[i][c0] != 0) clean = false;
    }
    for (size_t j = c0 + 1; j < cols; ++j) {
      BigInt q = m[r0][j] / m[r0][c0];
      if (q != 0)
        for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
      if (m[r0][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility fix-up: the pivot must divide everything below-right.
    bool fixed = false;
    for (size_t i = r0 + 1; i < rows && !fixed; ++i)
      for (size_t j = c0 + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[r0][c0] != 0) {
          for (size_t jj = c0; jj < cols; ++jj) m[r0][jj] += m[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    diag.push_back(abs(m[r0][c0]));
    ++r0;
    ++c0;
  }
  return diag;
}

std::vector<long> invariant_factors(const FiniteGroup& g) {
  // Relation lattice of the presentation with one generator per element:
  // order relations and product relations together cut out the group.
  int n = g.size();
  std::vector<std::vector<BigInt>> rel;
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> row(n, BigInt(0));
    row[i] = g.element_order[i];
    rel.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<BigInt> row(n, BigInt(0));
      row[i] += 1;
      row[j] += 1;
      row[g.mul(i, j)] -= 1;
      rel.push_back(std::move(row));
    }
  std::vector<BigInt> diag = smith_diagonal(std::move(rel));
  std::vector<long> factors;
  for (const BigInt& d : diag)
    if (d > 1) factors.push_back(d.convert_to<long>());
  std::sort(factors.begin(), factors.end());
  return factors;
}

AbelianDecomposition abelian_decomposition(const FiniteGroup& g) {
  return abelian_basis(g, invariant_factors(g));
}

Classification classify(const FiniteGroup& g) {
  Classification c;
  int n = g.size();
  if (g.is_abelian()) {
    c.invariant_factors = invariant_factors(g);
    if (n == 1) c.invariant_factors = {};
    if (c.invariant_factors.size() <= 1) {
      c.cls = GroupClass::Cyclic;
      c.name = "C" + std::to_string(n);
    } else {
      c.cls = GroupClass::Abelian;
      c.name = "";
      for (size_t i = 0; i < c.invariant_factors.size(); ++i) {
        if (i) c.name += "x";
        c.name += "C" + std::to_string(c.invariant_factors[i]);
      }
    }
    return c;
  }
  if (n == 6) {
    c.cls = GroupClass::S3;
    c.name = "S3";
    c.sigma = lex_least_of_order(g, 3);
    c.mu = lex_least_of_order(g, 2);
    return c;
  }
  if (n == 8) {
    int order2 = 0;
    for (int i = 0; i < n; ++i)
      if (g.element_order[i] == 2) ++order2;
    if (order2 == 5) {
      c.cls = GroupClass::D8;
      c.name = "D8";
      c.sigma = lex_least_of_order(g, 4);
      for (int idx : lex_sorted_indices(g)) {
        if (g.element_order[idx] != 2) continue;
        int s3 = g.mul(g.mul(c.sigma, c.sigma), c.sigma);
        if (g.mul(g.mul(idx, c.sigma), idx) == s3) {
          c.mu = idx;
          break;
        }
      }
      return c;
    }
  }
  c.cls = GroupClass::Other;
  c.name = "other";
  return c;
}

Relabeling relabel_group(const FiniteGroup& g, std::optional<int> sigma,
                         std::optional<int> mu) {
  Classification cls = classify(g);
  int n = g.size();
  std::vector<int> listing;  // old element indices in the new order

  auto check_order = [&](int idx, int want, const char* label) {
    if (idx < 0 || idx >= n || g.element_order[idx] != want)
      throw GroupMismatch(std::string("generator '") + label +
                          "' does not have order " + std::to_string(want));
  };

  switch (cls.cls) {
    case GroupClass::Cyclic: {
      int c = sigma ? *sigma : lex_least_of_order(g, n);
      if (mu) throw GroupMismatch("'mu' has no role for a cyclic group");
      if (n > 1) check_order(c, n, "sigma");
      int e = 0;
      for (int i = 0; i < n; ++i) {
        listing.push_back(e);
        e = g.mul(e, c);
      }
      cls.sigma = c;
      break;
    }
    case GroupClass::Abelian: {
      if (sigma || mu)
        throw GroupMismatch(
            "named generators are not used for general abelian groups");
      AbelianDecomposition basis = abelian_basis(g, cls.invariant_factors);
      size_t k = basis.gens.size();
      std::vector<long> exps(k, 0);
      while (true) {
        int e = 0;
        for (size_t i = 0; i < k; ++i)
          for (long t = 0; t < exps[i]; ++t) e = g.mul(e, basis.gens[i]);
        listing.push_back(e);
        size_t i = k;
        bool done = false;
        while (i > 0) {
          --i;
          if (++exps[i] < basis.factors[i]) break;
          exps[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
      break;
    }
    case GroupClass::S3:
    case GroupClass::D8: {
      int s = sigma ? *sigma : cls.sigma;
      int m = mu ? *mu : cls.mu;
      int rot = cls.cls == GroupClass::S3 ? 3 : 4;
      check_order(s, rot, "sigma");
      check_order(m, 2, "mu");
      int srot = s;
      for (int i = 1; i < rot - 1; ++i) srot = g.mul(srot, s);
      if (g.mul(g.mul(m, s), m) != srot)
        throw GroupMismatch("'mu' does not invert 'sigma'");
      int e = 0;
      for (int i = 0; i < rot; ++i) {
        listing.push_back(e);
        e = g.mul(e, s);
      }
      e = m;
      for (int i = 0; i < rot; ++i) {
        listing.push_back(e);
        e = g.mul(s, e);
      }
      cls.sigma = s;
      cls.mu = m;
      break;
    }
    case GroupClass::Other: {
      if (sigma || mu)
        throw GroupMismatch("named generators are not used for this group");
      for (int i = 0; i < n; ++i) listing.push_back(i);
      break;
    }
  }

  if (static_cast<int>(listing.size()) != n)
    throw Error("relabel listing has the wrong size");
  std::vector<int> new_of_old(n, -1);
  for (int i = 0; i < n; ++i) {
    if (new_of_old[listing[i]] != -1)
      throw Error("relabel listing repeats an element");
    new_of_old[listing[i]] = i;
  }

  Relabeling out;
  out.new_of_old = new_of_old;
  for (int i = 0; i < n; ++i) {
    const Permutation& old = g.elements[listing[i]];
    std::vector<int> im(n);
    for (int x = 0; x < n; ++x) im[x] = new_of_old[old(listing[x])];
    out.group.elements.emplace_back(std::move(im));
  }
  build_tables(out.group);
  // Element indices moved; update the distinguished generators.
  if (cls.sigma >= 0) cls.sigma = new_of_old[cls.sigma];
  if (cls.mu >= 0) cls.mu = new_of_old[cls.mu];
  out.cls = std::move(cls);
  return out;
}

Abelianization abelianization(const FiniteGroup& g) {
  int n = g.size();
  // Commutator subgroup: close the set of commutators.
  std::vector<bool> in_h(n, false);
  std::vector<int> h;
  auto add = [&](int x) {
    if (!in_h[x]) {
      in_h[x] = true;
      h.push_back(x);
    }
  };
  add(0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      add(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = 0; j < h.size(); ++j) add(g.mul(h[i], h[j]));

  // Cosets ordered by least member; identity coset first.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y : h) coset_of[g.mul(x, y)] = c;
  }
  int q = static_cast<int>(reps.size());
  Abelianization out;
  for (int i = 0; i < q; ++i) {
    std::vector<int> im(q);
    for (int j = 0; j < q; ++j) im[j] = coset_of[g.mul(reps[i], reps[j])];
    out.quotient.elements.emplace_back(std::move(im));
  }
  build_tables(out.quotient);
  out.projection = std::move(coset_of);
  return out;
}

}  // namespace rootrel::group
