#pragma once

#include <vector>

#include "rootrel/bigcomplex.hpp"
#include "rootrel/cyclotomic.hpp"
#include "rootrel/errors.hpp"
#include "rootrel/group.hpp"
#include "rootrel/roots.hpp"

namespace rootrel::algebra {

// Element of the group algebra K[G] with G fixed by a FiniteGroup pointer
// (not owned; the group outlives every element built from it).  The same
// template serves exact coefficients (Rational, CyclotomicNumber) and
// interval ones (BigComplex); members that need == or zero tests are only
// instantiated for coefficient types that support them.
template <typename K>
class GroupRingElement {
 public:
  GroupRingElement() : grp_(nullptr) {}
  explicit GroupRingElement(const group::FiniteGroup* g)
      : grp_(g), c_(g->size()) {}
  GroupRingElement(const group::FiniteGroup* g, std::vector<K> coeffs)
      : grp_(g), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != g->size())
      throw Error("group ring coefficient count mismatch");
  }

  const group::FiniteGroup* grp() const { return grp_; }
  int size() const { return static_cast<int>(c_.size()); }
  const K& operator[](int g) const { return c_[g]; }
  K& operator[](int g) { return c_[g]; }
  const std::vector<K>& coeffs() const { return c_; }

  GroupRingElement operator+(const GroupRingElement& o) const {
    check_same(o);
    GroupRingElement r(grp_);
    for (int i = 0; i < size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  GroupRingElement operator-(const GroupRingElement& o) const {
    check_same(o);
    GroupRingElement r(grp_);
    for (int i = 0; i < size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  GroupRingElement operator-() const {
    GroupRingElement r(grp_);
    for (int i = 0; i < size(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  // Convolution product: (x*y)_w = sum over uv = w of x_u y_v.
  GroupRingElement operator*(const GroupRingElement& o) const {
    check_same(o);
    GroupRingElement r(grp_);
    for (int u = 0; u < size(); ++u)
      for (int v = 0; v < size(); ++v)
        r.c_[grp_->mul(u, v)] += c_[u] * o.c_[v];
    return r;
  }
  GroupRingElement scaled(const K& s) const {
    GroupRingElement r(grp_);
    for (int i = 0; i < size(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  bool operator==(const GroupRingElement& o) const {
    check_same(o);
    return c_ == o.c_;
  }
  bool is_zero() const {
    for (const K& x : c_)
      if (!(x == K())) return false;
    return true;
  }

 private:
  void check_same(const GroupRingElement& o) const {
    if (grp_ != o.grp_) throw Error("group ring elements over different groups");
  }
  const group::FiniteGroup* grp_;
  std::vector<K> c_;
};

using GroupRingQ = GroupRingElement<Rational>;
using GroupRingCyc = GroupRingElement<CyclotomicNumber>;
using GroupRingNum = GroupRingElement<numeric::BigComplex>;

// 1 and the averaging idempotent delta = |G|^-1 sum of all elements.
GroupRingQ ring_one(const group::FiniteGroup& g);
GroupRingQ ring_delta(const group::FiniteGroup& g);
GroupRingQ basis_element(const group::FiniteGroup& g, int idx);

// Right multiplication by (1 - delta), the projection onto the complement
// V of the all-ones line.
GroupRingQ project_v(const GroupRingQ& x);
GroupRingNum project_v(const GroupRingNum& x);

GroupRingNum lift_numeric(const GroupRingQ& x);
GroupRingNum lift_numeric(const GroupRingCyc& x, int digits);

// M[alpha] = sum m_g g(alpha); with normalized labels g(alpha_1) is simply
// roots[g], so this is the coefficient dot product against the root list.
numeric::BigComplex evaluate_at_roots(const GroupRingQ& x,
                                      const numeric::RootList& roots);
numeric::BigComplex evaluate_at_roots(const GroupRingCyc& x,
                                      const numeric::RootList& roots,
                                      int digits);

// N = sum over g of alpha_g g^-1, the universal structure element: for any
// rational M the identity sum_g g(M[alpha]) g^-1 = M * N holds, and M is a
// relation vector (modulo constants) exactly when M * N * (1 - delta)
// vanishes.
GroupRingNum structure_element(const group::FiniteGroup& g,
                               const numeric::RootList& roots);

// Upper bound on max_g |coefficient_g|, used for certified zero tests.
numeric::BigReal max_coeff_upper(const GroupRingNum& x);

// Two-band zero decision across every coefficient.
numeric::ZeroStatus ring_zero_status(const GroupRingNum& x, int digits);

}  // namespace rootrel::algebra
