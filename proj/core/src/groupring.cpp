#include "rootrel/groupring.hpp"

namespace rootrel::algebra {

using numeric::BigComplex;
using numeric::BigReal;

GroupRingQ ring_one(const group::FiniteGroup& g) {
  GroupRingQ x(&g);
  x[0] = 1;
  return x;
}

GroupRingQ ring_delta(const group::FiniteGroup& g) {
  GroupRingQ x(&g);
  Rational c = make_rational(BigInt(1), BigInt(g.size()));
  for (int i = 0; i < g.size(); ++i) x[i] = c;
  return x;
}

GroupRingQ basis_element(const group::FiniteGroup& g, int idx) {
  GroupRingQ x(&g);
  x[idx] = 1;
  return x;
}

GroupRingQ project_v(const GroupRingQ& x) {
  return x - x * ring_delta(*x.grp());
}

GroupRingNum project_v(const GroupRingNum& x) {
  // x * (1 - delta) has coefficients x_g - mean(x).
  int n = x.size();
  BigComplex mean;
  for (int i = 0; i < n; ++i) mean += x[i];
  mean = mean.scaled(BigReal(1) / n);
  GroupRingNum r(x.grp());
  for (int i = 0; i < n; ++i) r[i] = x[i] - mean;
  return r;
}

GroupRingNum lift_numeric(const GroupRingQ& x) {
  GroupRingNum r(x.grp());
  for (int i = 0; i < x.size(); ++i)
    r[i] = BigComplex::from_rational(x[i]);
  return r;
}

GroupRingNum lift_numeric(const GroupRingCyc& x, int digits) {
  GroupRingNum r(x.grp());
  for (int i = 0; i < x.size(); ++i) r[i] = x[i].embed(digits);
  return r;
}

BigComplex evaluate_at_roots(const GroupRingQ& x,
                             const numeric::RootList& roots) {
  if (static_cast<int>(roots.roots.size()) != x.size())
    throw GroupMismatch("root list size does not match the group order");
  BigComplex sum;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    sum += roots.roots[i] * BigComplex::from_rational(x[i]);
  }
  return sum;
}

BigComplex evaluate_at_roots(const GroupRingCyc& x,
                             const numeric::RootList& roots, int digits) {
  if (static_cast<int>(roots.roots.size()) != x.size())
    throw GroupMismatch("root list size does not match the group order");
  BigComplex sum;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    sum += roots.roots[i] * x[i].embed(digits);
  }
  return sum;
}

GroupRingNum structure_element(const group::FiniteGroup& g,
                               const numeric::RootList& roots) {
  if (static_cast<int>(roots.roots.size()) != g.size())
    throw GroupMismatch("root list size does not match the group order");
  GroupRingNum r(&g);
  for (int i = 0; i < g.size(); ++i) r[g.inv(i)] += roots.roots[i];
  return r;
}

BigReal max_coeff_upper(const GroupRingNum& x) {
  BigReal m(0);
  for (int i = 0; i < x.size(); ++i) {
    BigReal v = x[i].abs_upper();
    if (v > m) m = v;
  }
  return m;
}

numeric::ZeroStatus ring_zero_status(const GroupRingNum& x, int digits) {
  bool ambiguous = false;
  for (int i = 0; i < x.size(); ++i) {
    switch (numeric::zero_status(x[i], digits)) {
      case numeric::ZeroStatus::NonZero:
        return numeric::ZeroStatus::NonZero;
      case numeric::ZeroStatus::Ambiguous:
        ambiguous = true;
        break;
      case numeric::ZeroStatus::Zero:
        break;
    }
  }
  return ambiguous ? numeric::ZeroStatus::Ambiguous : numeric::ZeroStatus::Zero;
}

}  // namespace rootrel::algebra
