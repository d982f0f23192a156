#pragma once

#include <optional>
#include <vector>

#include "rootrel/rational.hpp"

namespace rootrel::algebra {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

int rank(QMatrix m);

// Row-reduced echelon basis of the row span (pivot columns ascending,
// pivots 1, zero rows dropped).
QMatrix row_space_basis(QMatrix m);

// Is v in the row span of basis?  basis need not be reduced.
bool in_span(const QMatrix& basis, const QVector& v);

// Mutual containment of row spans.
bool same_span(const QMatrix& a, const QMatrix& b);

// Solves x * m = v for a row vector x; nullopt when v is outside the row
// span.  Used to express oracle relations in an emitted basis.
std::optional<QVector> solve_left(const QMatrix& m, const QVector& v);

}  // namespace rootrel::algebra
