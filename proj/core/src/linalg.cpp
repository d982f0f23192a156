#include "rootrel/linalg.hpp"

#include <utility>

#include "rootrel/errors.hpp"

namespace rootrel::algebra {

namespace {

// Gauss-Jordan over Q.  Returns pivot columns; `track` optionally records
// the row operations applied to an identity block (for solve_left).
std::vector<int> reduce(QMatrix& m, QMatrix* track = nullptr) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    if (track) std::swap((*track)[p], (*track)[r]);
    const Rational inv = make_rational(1, 1) / m[r][c];
    for (int j = 0; j < cols; ++j) m[r][j] *= inv;
    if (track)
      for (Rational& x : (*track)[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      if (track)
        for (int j = 0; j < static_cast<int>((*track)[i].size()); ++j)
          (*track)[i][j] -= f * (*track)[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(reduce(m).size()); }

QMatrix row_space_basis(QMatrix m) {
  std::vector<int> pivots = reduce(m);
  m.resize(pivots.size());
  return m;
}

bool in_span(const QMatrix& basis, const QVector& v) {
  QMatrix m = basis;
  const int r0 = static_cast<int>(reduce(m).size());
  m.resize(r0);
  m.push_back(v);
  return static_cast<int>(reduce(m).size()) == r0;
}

bool same_span(const QMatrix& a, const QMatrix& b) {
  return row_space_basis(a) == row_space_basis(b);
}

std::optional<QVector> solve_left(const QMatrix& m, const QVector& v) {
  if (m.empty()) {
    for (const Rational& x : v)
      if (x != 0) return std::nullopt;
    return QVector{};
  }
  const int rows = static_cast<int>(m.size());
  QMatrix work = m;
  QMatrix track(rows, QVector(rows, Rational(0)));
  for (int i = 0; i < rows; ++i) track[i][i] = 1;
  std::vector<int> pivots = reduce(work, &track);

  // Express v over the reduced rows, then translate back through track.
  QVector coeff(pivots.size(), Rational(0));
  QVector residue = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    coeff[i] = residue[pivots[i]];
    if (coeff[i] == 0) continue;
    for (std::size_t j = 0; j < residue.size(); ++j)
      residue[j] -= coeff[i] * work[i][j];
  }
  for (const Rational& x : residue)
    if (x != 0) return std::nullopt;
  QVector out(rows, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < rows; ++j) out[j] += coeff[i] * track[i][j];
  return out;
}

}  // namespace rootrel::algebra
