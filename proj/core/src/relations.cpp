#include "rootrel/relations.hpp"

#include <string>
#include <utility>

#include "rootrel/errors.hpp"
#include "rootrel/lll.hpp"
#include "rootrel/recognize.hpp"

namespace rootrel::relations {

using algebra::GroupRingQ;
using algebra::QMatrix;
using algebra::QVector;
using numeric::BigComplex;
using numeric::BigReal;
using numeric::ZeroStatus;

namespace {

BigComplex interval_eval(const std::vector<BigInt>& m, const Rational& rhs,
                         const numeric::RootList& roots) {
  BigComplex v;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    v += roots.roots[i] * BigComplex::from_bigint(m[i]);
  }
  return v - BigComplex::from_rational(rhs);
}

QVector to_row(const Relation& r) {
  QVector row;
  row.reserve(r.m.size() + 1);
  for (const BigInt& c : r.m) row.push_back(Rational(c));
  row.push_back(r.rhs);
  return row;
}

// Exact full-rank guard for freshly built component bases.
void require_full_rank(const RelationBasis& b, const char* where) {
  QMatrix rows;
  for (const Relation& r : b.relations) rows.push_back(to_row(r));
  if (algebra::rank(rows) != static_cast<int>(b.relations.size()))
    throw DependentBasis(std::string(where) +
                         " produced linearly dependent relations");
}

}  // namespace

numeric::BigReal relation_residual(const Relation& r,
                                   const numeric::RootList& roots) {
  return interval_eval(r.m, r.rhs, roots).abs_upper();
}

Relation make_relation(std::vector<Rational> m, Rational rhs,
                       std::string provenance,
                       const numeric::RootList& roots, int digits) {
  Relation r;
  if (!algebra::normalize_relation_vector(m, rhs, r.m))
    throw Error("attempted to emit the zero relation");
  r.rhs = rhs;
  r.provenance = std::move(provenance);
  switch (numeric::zero_status(interval_eval(r.m, r.rhs, roots), digits)) {
    case ZeroStatus::Zero:
      return r;
    case ZeroStatus::Ambiguous:
      throw AmbiguousZero("relation residual is between the certification "
                          "bands");
    default:
      throw SpanMismatch("constructed relation fails its own certificate");
  }
}

TrivialResult lr_trivial(const numeric::IntPolynomial& f,
                         const numeric::IntExpression& expr,
                         const group::FiniteGroup& g) {
  const BigInt tr = numeric::transformed_power_sums(f, expr, 1)[0];
  TrivialResult out;
  out.relation.m.assign(g.size(), BigInt(1));
  out.relation.rhs = Rational(tr);
  out.relation.provenance = "trivial";
  out.trace = Rational(tr);
  out.lr1_nonzero = (tr == 0);
  return out;
}

RelationBasis lr_deg1(const algebra::CharacterOrbit& orbit,
                      const numeric::RootList& roots,
                      const group::FiniteGroup& g, int digits) {
  if (orbit.rep.is_trivial())
    throw Error("the trivial orbit is handled by lr_trivial");
  const long l = orbit.rep.order;
  const std::vector<long>& k = orbit.rep.exponent;

  std::vector<BigComplex> zeta(l);
  for (long e = 0; e < l; ++e)
    zeta[e] = algebra::CyclotomicNumber::zeta_power(l, e).embed(digits);

  // Vanishing test across the whole orbit.  One certified nonzero sum
  // kills the component; an ambiguous one (with no nonzero) asks for more
  // digits.
  bool ambiguous = false;
  for (long d : orbit.exponents_d) {
    BigComplex s;
    for (int h = 0; h < g.size(); ++h)
      s += zeta[(d * k[h]) % l] * roots.roots[h];
    switch (numeric::zero_status(s, digits)) {
      case ZeroStatus::NonZero:
        return {};
      case ZeroStatus::Ambiguous:
        ambiguous = true;
        break;
      default:
        break;
    }
  }
  if (ambiguous)
    throw AmbiguousZero("character sum is between the certification bands");

  RelationBasis out;
  const long phi = static_cast<long>(orbit.exponents_d.size());
  for (long i = 0; i < phi; ++i) {
    std::vector<Rational> m(g.size());
    for (int h = 0; h < g.size(); ++h)
      m[h] = algebra::cyclotomic_trace(i - k[h], l);
    out.relations.push_back(
        make_relation(std::move(m), Rational(0), "deg1", roots, digits));
  }
  out.dimension = static_cast<int>(phi);
  require_full_rank(out, "degree-1 component");
  return out;
}

StructureMatrix structure_matrix(const algebra::TwoDimRep& rep,
                                 const numeric::RootList& roots,
                                 const group::FiniteGroup& g) {
  StructureMatrix s;
  BigComplex* cell[4] = {&s.a11, &s.a12, &s.a21, &s.a22};
  for (int e = 0; e < g.size(); ++e) {
    const BigComplex& ar = roots.roots[g.inv(e)];
    for (int q = 0; q < 4; ++q) {
      if (rep.matrices[e][q] == 0) continue;
      *cell[q] += ar * BigComplex::from_rational(rep.matrices[e][q]);
    }
  }
  return s;
}

TwoDimResult lr_2dim(const algebra::TwoDimRep& rep,
                     const numeric::RootList& roots,
                     const group::FiniteGroup& g, const BigInt& den_bound,
                     int digits) {
  TwoDimResult out;
  out.structure = structure_matrix(rep, roots, g);
  const ZeroStatus s11 = numeric::zero_status(out.structure.a11, digits);
  const ZeroStatus s21 = numeric::zero_status(out.structure.a21, digits);
  if (s11 == ZeroStatus::Ambiguous || s21 == ZeroStatus::Ambiguous)
    throw AmbiguousZero("structure column is between the certification "
                        "bands");
  if (s11 == ZeroStatus::Zero && s21 == ZeroStatus::Zero)
    throw PrecisionExhausted(
        "both structure entries test as zero, which is impossible for a "
        "generating root; the numerics are beyond repair");

  BigInt a, b;
  if (s11 == ZeroStatus::Zero) {
    a = 1;
    b = 0;
    out.diagnostic = "oo";
  } else if (s21 == ZeroStatus::Zero) {
    a = 0;
    b = 1;
    out.diagnostic = "0";
  } else {
    std::optional<Rational> ratio =
        numeric::recognize_rational(out.structure.a21 / out.structure.a11,
                                    den_bound);
    if (!ratio) return out;  // irrational ratio: empty component
    out.diagnostic = algebra::rational_to_string(*ratio);
    a = -numerator(*ratio);
    b = denominator(*ratio);
  }
  out.ab = std::make_pair(a, b);

  GroupRingQ w = rep.v1.scaled(Rational(a)) + rep.v2.scaled(Rational(b));
  GroupRingQ sw = algebra::basis_element(g, rep.sigma) * w;
  out.basis.relations.push_back(
      make_relation(w.coeffs(), Rational(0), "degree2", roots, digits));
  out.basis.relations.push_back(
      make_relation(sw.coeffs(), Rational(0), "degree2", roots, digits));
  out.basis.dimension = 2;
  require_full_rank(out.basis, "degree-2 component");
  return out;
}

RelationBasis assemble_lr(const TrivialResult& trivial,
                          const std::vector<RelationBasis>& parts) {
  RelationBasis out;
  out.relations.push_back(trivial.relation);
  for (const RelationBasis& p : parts)
    for (const Relation& r : p.relations) out.relations.push_back(r);
  out.dimension = static_cast<int>(out.relations.size());
  require_full_rank(out, "assembled space");
  return out;
}

RelationBasis oracle_relation_space(const numeric::RootList& roots,
                                    int digits, const BigInt& height_bound) {
  const int n = static_cast<int>(roots.roots.size());
  std::vector<int> active(n + 1);
  for (int i = 0; i <= n; ++i) active[i] = i;

  RelationBasis out;
  while (static_cast<int>(active.size()) > 1) {
    const BigInt h = numeric::effective_height_bound(
        digits, static_cast<int>(active.size()), height_bound);
    std::vector<BigComplex> vals;
    vals.reserve(active.size());
    for (int idx : active)
      vals.push_back(idx == n ? BigComplex::from_int(1) : roots.roots[idx]);
    std::optional<std::vector<BigInt>> rel =
        numeric::integer_relation(vals, digits, h);
    if (!rel) break;

    std::vector<Rational> m(n, Rational(0));
    Rational rhs(0);
    int pivot = -1;
    for (std::size_t j = 0; j < active.size(); ++j) {
      if ((*rel)[j] == 0) continue;
      if (active[j] == n) {
        rhs = -Rational((*rel)[j]);
      } else {
        m[active[j]] = Rational((*rel)[j]);
        if (pivot < 0) pivot = static_cast<int>(j);
      }
    }
    if (pivot < 0)
      throw Error("relation search returned a constant-only vector");
    out.relations.push_back(
        make_relation(std::move(m), rhs, "oracle", roots, digits));
    active.erase(active.begin() + pivot);
  }
  out.dimension = static_cast<int>(out.relations.size());
  require_full_rank(out, "oracle space");
  return out;
}

QMatrix relation_rows(const RelationBasis& b) {
  QMatrix rows;
  rows.reserve(b.relations.size());
  for (const Relation& r : b.relations) rows.push_back(to_row(r));
  return rows;
}

ComparisonReport verify_and_compare(const RelationBasis& assembled,
                                    const RelationBasis& oracle,
                                    const std::vector<ComponentSpan>& parts,
                                    const numeric::RootList& roots,
                                    const group::FiniteGroup& g, int digits,
                                    bool height_saturated) {
  ComparisonReport rep;
  rep.max_residual = BigReal(0);
  rep.max_projection_residual = BigReal(0);
  const BigReal tol = numeric::pow10(-(digits / 2));

  for (const RelationBasis* side : {&assembled, &oracle})
    for (const Relation& r : side->relations) {
      BigReal res = relation_residual(r, roots);
      if (res > rep.max_residual) rep.max_residual = res;
      if (!(res < tol))
        throw SpanMismatch("emitted relation exceeds the residual tolerance");
    }

  const QMatrix arows = relation_rows(assembled);
  const QMatrix orows = relation_rows(oracle);
  rep.rank_equal = (assembled.dimension == oracle.dimension);

  for (const QVector& row : arows)
    if (!algebra::in_span(orows, row)) {
      if (!height_saturated)
        throw InsufficientPrecision(
            "a derived relation is invisible to the clamped lattice search");
      throw SpanMismatch("derived relation missing from the lattice basis");
    }
  for (const QVector& row : orows)
    if (!algebra::in_span(arows, row))
      throw SpanMismatch("lattice search found a relation outside the "
                         "derived space");
  rep.spans_equal = true;
  if (!rep.rank_equal)
    throw SpanMismatch("relation spaces agree but ranks differ");

  // Component-wise projection: every lattice relation, pushed through a
  // component idempotent, must land exactly in that component's emitted
  // homogeneous span (or vanish when the component is empty), and its
  // evaluation must stay within tolerance.
  for (const Relation& r : oracle.relations) {
    GroupRingQ x(&g);
    for (int i = 0; i < g.size(); ++i) x[i] = Rational(r.m[i]);
    for (const ComponentSpan& part : parts) {
      GroupRingQ y = x * part.idempotent;
      QMatrix span;
      for (const Relation& s : part.basis->relations) {
        QVector row;
        for (const BigInt& c : s.m) row.push_back(Rational(c));
        span.push_back(std::move(row));
      }
      if (span.empty()) {
        if (!y.is_zero())
          throw SpanMismatch("projection of a lattice relation hits an "
                             "empty component");
      } else if (!algebra::in_span(span, y.coeffs())) {
        throw SpanMismatch("projection of a lattice relation leaves the "
                           "component span");
      }
      BigReal res = algebra::evaluate_at_roots(y, roots).abs_upper();
      if (res > rep.max_projection_residual) rep.max_projection_residual = res;
      if (!(res < tol))
        throw SpanMismatch("projected relation exceeds the residual "
                           "tolerance");
    }
  }
  rep.projections_ok = true;
  return rep;
}

}  // namespace rootrel::relations
