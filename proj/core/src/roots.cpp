#include "rootrel/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "rootrel/errors.hpp"

namespace rootrel::numeric {

using algebra::BigInt;

namespace {

// Bare complex pair for the refinement loop; no interval tracking, speed
// matters here and the certificate comes afterwards.
struct CF {
  BigReal re, im;
  CF() : re(0), im(0) {}
  CF(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  CF operator+(const CF& o) const { return {re + o.re, im + o.im}; }
  CF operator-(const CF& o) const { return {re - o.re, im - o.im}; }
  CF operator*(const CF& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CF operator/(const CF& o) const {
    BigReal d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  BigReal abs2() const { return re * re + im * im; }
};

std::vector<CF> initial_guesses(const IntPolynomial& f) {
  int n = f.degree();
  bool ok = true;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double c = f.coeffs[i].convert_to<double>();
    if (!std::isfinite(c)) ok = false;
    companion(i, n - 1) = -c;
    if (i + 1 < n) companion(i + 1, i) = 1.0;
  }
  std::vector<CF> z;
  if (ok) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() == Eigen::Success) {
      for (int i = 0; i < n; ++i) {
        std::complex<double> v = solver.eigenvalues()[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          ok = false;
          break;
        }
        z.emplace_back(BigReal(v.real()), BigReal(v.imag()));
      }
    } else {
      ok = false;
    }
  }
  if (!ok || static_cast<int>(z.size()) != n) {
    // Cauchy bound circle, with an irrational-ish phase so symmetric
    // configurations do not trap the iteration.
    z.clear();
    BigReal r(1);
    for (int i = 0; i < n; ++i) {
      BigReal c = abs(to_bigreal(f.coeffs[i]));
      if (c + 1 > r) r = c + 1;
    }
    BigReal two_pi = const_pi() * 2;
    for (int i = 0; i < n; ++i) {
      BigReal angle = two_pi * (BigReal(i) + BigReal(1) / 4) / n +
                      BigReal(1) / 2;
      z.emplace_back(r * cos(angle), r * sin(angle));
    }
  }
  return z;
}

// Simultaneous Newton corrections; converges quadratically near simple
// roots from decent starting points.
bool aberth_refine(const IntPolynomial& f, std::vector<CF>& z, int digits) {
  int n = f.degree();
  std::vector<CF> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = CF(to_bigreal(f.coeffs[i]), BigReal(0));
  BigReal target = pow10(-(digits + 5));
  for (int iter = 0; iter < 500; ++iter) {
    BigReal worst(0);
    BigReal scale(1);
    for (int i = 0; i < n; ++i) {
      CF fz, dz;
      for (int k = n; k >= 0; --k) {
        if (k < n) dz = dz * z[i] + fz;
        fz = fz * z[i] + c[k];
      }
      CF w;
      if (dz.abs2() == 0) {
        // Sitting on a critical point: nudge and continue.
        w = CF(BigReal(1) / (iter + 2), BigReal(1) / (iter + 3));
      } else {
        CF newton = fz / dz;
        CF rep;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          CF d = z[i] - z[j];
          if (d.abs2() == 0) d = CF(target, target);
          rep = rep + CF(BigReal(1), BigReal(0)) / d;
        }
        CF denom = CF(BigReal(1), BigReal(0)) - newton * rep;
        w = denom.abs2() == 0 ? newton : newton / denom;
      }
      z[i] = z[i] - w;
      BigReal wa = sqrt(w.abs2());
      if (wa > worst) worst = wa;
      BigReal za = sqrt(z[i].abs2());
      if (za > scale) scale = za;
    }
    if (worst <= scale * target) return true;
  }
  return false;
}

struct Certificate {
  std::vector<BigComplex> roots;
  BigReal err;
  bool ok = false;
};

// Inclusion disks: around each approximation z with f'(z) well away from
// zero, the disk of radius n*|f(z)/f'(z)| contains at least one root; if
// the n disks are pairwise disjoint each holds exactly one.
Certificate certify(const IntPolynomial& f, const std::vector<CF>& z,
                    int digits) {
  int n = f.degree();
  Certificate cert;
  BigReal err(0);
  std::vector<BigComplex> centers;
  for (int i = 0; i < n; ++i) {
    BigComplex zi(z[i].re, z[i].im);
    BigComplex fz = f.eval(zi);
    BigComplex dz = f.derivative().eval(zi);
    if (dz.abs_lower() == 0) return cert;
    BigReal bound = fz.abs_upper() / dz.abs_lower() * n;
    if (bound > err) err = bound;
    centers.push_back(zi);
  }
  err += rounding_eps();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(distance_lower(centers[i], centers[j]) > err * 4)) return cert;
  // Triviality cross-check: the root sum must match the trace.
  BigComplex sum;
  for (const BigComplex& v : centers) sum += v;
  sum -= BigComplex::from_bigint(f.trace());
  if (!(sum.abs_upper() < err * n * 10 + pow10(-(digits / 2)))) return cert;
  for (BigComplex& v : centers) v.err = err;
  cert.roots = std::move(centers);
  cert.err = err;
  cert.ok = true;
  return cert;
}

void sort_cluster(std::vector<BigComplex>& roots, const BigReal& err) {
  std::sort(roots.begin(), roots.end(),
            [](const BigComplex& a, const BigComplex& b) { return a.re > b.re; });
  // Roots whose real parts are not certifiably distinct form a cluster and
  // are ordered by imaginary part instead.
  BigReal tie = err * 4;
  size_t start = 0;
  while (start < roots.size()) {
    size_t end = start + 1;
    while (end < roots.size() && roots[end - 1].re - roots[end].re <= tie)
      ++end;
    std::sort(roots.begin() + start, roots.begin() + end,
              [](const BigComplex& a, const BigComplex& b) { return a.im > b.im; });
    start = end;
  }
}

}  // namespace

RootList find_roots(const IntPolynomial& f, const PrecisionPolicy& policy) {
  if (f.degree() < 2 || !f.monic())
    throw RequestError("polynomial must be monic of degree at least 2");
  if (!f.squarefree()) throw NotSquarefree("polynomial has a repeated root");

  PrecisionPolicy p = policy;
  std::vector<CF> seed;
  while (true) {
    set_working_digits(p.digits);
    std::vector<CF> z = initial_guesses(f);
    if (!seed.empty()) {
      // Carry over the previous stage's approximations.  Copies keep their
      // source precision, so round-trip through exact rationals to get
      // values living at the new working precision.
      z.clear();
      for (const CF& s : seed)
        z.emplace_back(to_bigreal(exact_rational(s.re)),
                       to_bigreal(exact_rational(s.im)));
    }
    if (aberth_refine(f, z, p.digits)) {
      Certificate cert = certify(f, z, p.digits);
      if (cert.ok) {
        sort_cluster(cert.roots, cert.err);
        RootList out;
        out.roots = std::move(cert.roots);
        out.err = cert.err;
        out.digits = p.digits;
        return out;
      }
    }
    if (!p.can_escalate())
      throw PrecisionExhausted("could not certify distinct roots at " +
                               std::to_string(p.digits) + " digits");
    seed = z;
    p = p.escalated();
  }
}

RootList transform_roots(const RootList& base, const IntExpression& expr,
                         int digits) {
  RootList out;
  out.digits = digits;
  BigReal err(0);
  for (const BigComplex& r : base.roots) {
    BigComplex v = expr.eval(r);
    if (v.err > err) err = v.err;
    out.roots.push_back(v);
  }
  out.err = err;
  for (size_t i = 0; i < out.roots.size(); ++i) {
    out.roots[i].err = err;
    for (size_t j = 0; j < i; ++j)
      if (!(distance_lower(out.roots[i], out.roots[j]) > err * 4))
        throw InsufficientPrecision(
            "transformed roots not separated at this precision");
  }
  return out;
}

}  // namespace rootrel::numeric
