#pragma once

#include <string>
#include <vector>

#include "rootrel/bigcomplex.hpp"
#include "rootrel/rational.hpp"

namespace rootrel::numeric {

// Monic integer polynomial, coefficients stored in ascending degree order.
struct IntPolynomial {
  std::vector<algebra::BigInt> coeffs;

  explicit IntPolynomial(std::vector<algebra::BigInt> c);
  static IntPolynomial from_longs(const std::vector<long>& c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool monic() const;

  IntPolynomial derivative() const;
  BigComplex eval(const BigComplex& z) const;
  algebra::Rational eval(const algebra::Rational& x) const;

  // True when gcd(f, f') is constant.
  bool squarefree() const;

  // Sum of the roots, i.e. -coeffs[n-1] for a monic polynomial.
  algebra::BigInt trace() const;

  // Power sums p_1..p_m of the roots via Newton's identities (exact).
  std::vector<algebra::BigInt> power_sums(int m) const;

  std::string str() const;
};

// Polynomial with integer coefficients, not necessarily monic, used for
// root expressions supplied on the command line.  Evaluation only.
struct IntExpression {
  std::vector<algebra::BigInt> coeffs;  // ascending, may be empty (= 0)

  BigComplex eval(const BigComplex& z) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Parses terms like "5-5*z-3*z^4" over a single variable z (any single
// latin letter is accepted).  Throws RequestError on malformed input.
IntExpression parse_expression(const std::string& text);

// Power sums q_k = sum over roots alpha of f of expr(alpha)^k, k = 1..m,
// computed exactly: expr^k reduced modulo f has integer coefficients (f is
// monic), and the conjugate sum of alpha^j is a Newton power sum of f.
std::vector<algebra::BigInt> transformed_power_sums(const IntPolynomial& f,
                                                    const IntExpression& expr,
                                                    int m);

// Whether expr separates the roots of f, i.e. the values expr(alpha_i) are
// pairwise distinct.  Decided exactly: the monic polynomial with those n
// values as roots is reconstructed from the power sums above and tested
// for repeated roots.
bool transform_is_injective(const IntPolynomial& f, const IntExpression& expr);

}  // namespace rootrel::numeric
