#include "rootrel/lll.hpp"

#include "rootrel/errors.hpp"

namespace rootrel::numeric {

using algebra::BigInt;
using algebra::Rational;
using algebra::make_rational;
using algebra::rational_floor;

namespace {

BigInt round_nearest(const Rational& q) {
  return rational_floor(q + make_rational(BigInt(1), BigInt(2)));
}

// Gram-Schmidt bookkeeping over exact rationals: mu[i][j] for j < i and the
// squared lengths B[i] of the orthogonalized rows.  Rows themselves stay
// integral; only the bookkeeping is rational.
struct GS {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> B;
};

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

GS initial_gs(const std::vector<std::vector<BigInt>>& rows) {
  size_t m = rows.size();
  GS gs;
  gs.mu.assign(m, std::vector<Rational>(m, Rational(0)));
  gs.B.assign(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < i; ++j) {
      Rational s(dot(rows[i], rows[j]));
      for (size_t l = 0; l < j; ++l)
        s -= gs.mu[i][l] * gs.mu[j][l] * gs.B[l];
      if (gs.B[j] == 0) throw Error("lattice rows are linearly dependent");
      gs.mu[i][j] = s / gs.B[j];
    }
    Rational b(dot(rows[i], rows[i]));
    for (size_t l = 0; l < i; ++l) b -= gs.mu[i][l] * gs.mu[i][l] * gs.B[l];
    gs.B[i] = b;
  }
  return gs;
}

void size_reduce(std::vector<std::vector<BigInt>>& rows, GS& gs, size_t k,
                 size_t j) {
  BigInt r = round_nearest(gs.mu[k][j]);
  if (r == 0) return;
  Rational rq(r);
  for (size_t c = 0; c < rows[k].size(); ++c) rows[k][c] -= r * rows[j][c];
  gs.mu[k][j] -= rq;
  for (size_t l = 0; l < j; ++l) gs.mu[k][l] -= rq * gs.mu[j][l];
}

}  // namespace

void lll_reduce(std::vector<std::vector<BigInt>>& basis) {
  size_t m = basis.size();
  if (m <= 1) return;
  const Rational delta = make_rational(BigInt(99), BigInt(100));
  GS gs = initial_gs(basis);
  size_t k = 1;
  while (k < m) {
    size_reduce(basis, gs, k, k - 1);
    if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) {
      std::swap(basis[k - 1], basis[k]);
      // Standard swap update: only rows k-1, k and the two affected mu
      // columns of later rows change.
      Rational mu_old = gs.mu[k][k - 1];
      Rational B_km1 = gs.B[k - 1];
      Rational B_k = gs.B[k];
      Rational B_new = B_k + mu_old * mu_old * B_km1;
      if (B_new == 0) throw Error("lattice rows are linearly dependent");
      Rational mu_new = mu_old * B_km1 / B_new;
      gs.B[k] = B_km1 * B_k / B_new;
      gs.B[k - 1] = B_new;
      for (size_t j = 0; j + 1 < k; ++j)
        std::swap(gs.mu[k - 1][j], gs.mu[k][j]);
      gs.mu[k][k - 1] = mu_new;
      for (size_t i = k + 1; i < m; ++i) {
        Rational t = gs.mu[i][k];
        gs.mu[i][k] = gs.mu[i][k - 1] - mu_old * t;
        gs.mu[i][k - 1] = t + mu_new * gs.mu[i][k];
      }
      k = k > 1 ? k - 1 : 1;
    } else {
      for (size_t j = k - 1; j-- > 0;) size_reduce(basis, gs, k, j);
      ++k;
    }
  }
}

algebra::BigInt effective_height_bound(int digits, int k,
                                       const algebra::BigInt& cap) {
  long e = (digits / 2 - 1) / k;
  if (e < 1) e = 1;
  BigInt h = 1;
  for (long i = 0; i < e; ++i) h *= 10;
  return h < cap ? h : cap;
}

std::optional<std::vector<BigInt>> integer_relation(
    const std::vector<BigComplex>& values, int digits,
    const BigInt& height_bound) {
  size_t k = values.size();
  if (k < 2) return std::nullopt;
  // Headroom precondition: the embedding scale must dominate the worst
  // admissible coefficient vector, or true and spurious relations blur.
  BigInt hk = 1;
  for (size_t i = 0; i < k; ++i) hk *= height_bound;
  BigInt scale_floor = 1;
  for (int i = 0; i < digits / 2; ++i) scale_floor *= 10;
  if (!(scale_floor > hk))
    throw InsufficientPrecision("height bound too large for working digits");

  BigInt S = 1;
  for (int i = 0; i < digits - 10; ++i) S *= 10;
  Rational Sq(S);

  std::vector<std::vector<BigInt>> rows(k, std::vector<BigInt>(k + 2));
  for (size_t i = 0; i < k; ++i) {
    rows[i][i] = 1;
    rows[i][k] = round_nearest(Sq * exact_rational(values[i].re));
    rows[i][k + 1] = round_nearest(Sq * exact_rational(values[i].im));
  }
  lll_reduce(rows);

  // Try candidates from shortest to longest; accept the first one whose
  // certified interval evaluation vanishes below the threshold.
  std::vector<size_t> order(k);
  for (size_t i = 0; i < k; ++i) order[i] = i;
  std::vector<BigInt> norms(k);
  for (size_t i = 0; i < k; ++i) norms[i] = dot(rows[i], rows[i]);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return norms[a] < norms[b]; });

  BigReal threshold = pow10(-(digits / 2));
  for (size_t oi : order) {
    const std::vector<BigInt>& row = rows[oi];
    bool nonzero = false, small = true;
    for (size_t i = 0; i < k; ++i) {
      if (row[i] != 0) nonzero = true;
      if (abs(row[i]) > height_bound) small = false;
    }
    if (!nonzero || !small) continue;
    BigComplex sum;
    for (size_t i = 0; i < k; ++i) {
      if (row[i] == 0) continue;
      sum += values[i].scaled(to_bigreal(row[i]));
    }
    if (sum.abs_upper() < threshold) {
      std::vector<BigInt> rel(row.begin(), row.begin() + k);
      return rel;
    }
  }
  return std::nullopt;
}

}  // namespace rootrel::numeric
