#include "rootrel/polynomial.hpp"

#include <cctype>

#include "rootrel/errors.hpp"

namespace rootrel::numeric {

using algebra::BigInt;
using algebra::Rational;

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(BigInt(0));
}

IntPolynomial IntPolynomial::from_longs(const std::vector<long>& c) {
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::monic() const {
  return degree() >= 1 && coeffs.back() == 1;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * BigInt(static_cast<long>(i)));
  if (d.empty()) d.push_back(BigInt(0));
  return IntPolynomial(std::move(d));
}

BigComplex IntPolynomial::eval(const BigComplex& z) const {
  BigComplex r = BigComplex::from_bigint(coeffs.back());
  for (int i = degree() - 1; i >= 0; --i) {
    r *= z;
    r += BigComplex::from_bigint(coeffs[i]);
  }
  return r;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational r(coeffs.back());
  for (int i = degree() - 1; i >= 0; --i) r = r * x + Rational(coeffs[i]);
  return r;
}

namespace {

using QPoly = std::vector<Rational>;  // ascending, normalized (no top zeros)

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

bool IntPolynomial::squarefree() const {
  QPoly a, b;
  for (const BigInt& c : coeffs) a.emplace_back(c);
  for (const BigInt& c : derivative().coeffs) b.emplace_back(c);
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

BigInt IntPolynomial::trace() const {
  if (degree() < 1) return BigInt(0);
  return -coeffs[coeffs.size() - 2];
}

std::vector<BigInt> IntPolynomial::power_sums(int m) const {
  int n = degree();
  std::vector<BigInt> p(m + 1);
  p[0] = n;
  for (int k = 1; k <= m; ++k) {
    BigInt s = 0;
    for (int i = 1; i < k && i <= n; ++i) s += coeffs[n - i] * p[k - i];
    if (k <= n) s += BigInt(k) * coeffs[n - k];
    p[k] = -s;
  }
  p.erase(p.begin());
  return p;
}

std::string IntPolynomial::str() const {
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs[i];
    if (c == 0 && degree() > 0) continue;
    BigInt a = abs(c);
    if (s.empty())
      s += (c < 0 ? "-" : "");
    else
      s += (c < 0 ? "-" : "+");
    if (i == 0 || a != 1) s += a.str();
    if (i >= 1) {
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  if (s.empty()) s = "0";
  return s;
}

std::vector<BigInt> transformed_power_sums(const IntPolynomial& f,
                                           const IntExpression& expr, int m) {
  int n = f.degree();
  std::vector<BigInt> p = f.power_sums(std::max(0, n - 1));
  // Residues modulo f stay integral because f is monic.
  auto reduce = [&](std::vector<BigInt>& a) {
    while (static_cast<int>(a.size()) > n) {
      BigInt lead = a.back();
      size_t shift = a.size() - f.coeffs.size();
      if (lead != 0)
        for (size_t j = 0; j < f.coeffs.size(); ++j)
          a[shift + j] -= lead * f.coeffs[j];
      a.pop_back();
    }
    a.resize(n, BigInt(0));
  };
  std::vector<BigInt> e(expr.coeffs);
  if (e.empty()) e.push_back(BigInt(0));
  reduce(e);
  std::vector<BigInt> pw(n, BigInt(0));
  pw[0] = 1;  // expr^0
  std::vector<BigInt> sums;
  for (int k = 1; k <= m; ++k) {
    std::vector<BigInt> prod(2 * n - 1, BigInt(0));
    for (int i = 0; i < n; ++i) {
      if (pw[i] == 0) continue;
      for (int j = 0; j < n; ++j) prod[i + j] += pw[i] * e[j];
    }
    reduce(prod);
    pw = std::move(prod);
    // Trace of sum c_j alpha^j is c_0 * n + sum c_j p_j.
    BigInt t = pw[0] * BigInt(n);
    for (int j = 1; j < n; ++j) t += pw[j] * p[j - 1];
    sums.push_back(t);
  }
  return sums;
}

bool transform_is_injective(const IntPolynomial& f, const IntExpression& expr) {
  int n = f.degree();
  std::vector<BigInt> q = transformed_power_sums(f, expr, n);
  // Newton's identities give the elementary symmetric functions of the
  // transformed values; repeated values show up as a repeated root of the
  // reconstructed polynomial.
  std::vector<Rational> e(n + 1, Rational(0));
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i) {
      Rational term = e[k - i] * Rational(q[i - 1]);
      if (i % 2 == 0) s -= term; else s += term;
    }
    e[k] = s / Rational(k);
  }
  QPoly g(n + 1), gd(n);
  for (int k = 0; k <= n; ++k) {
    Rational c = e[n - k];
    if ((n - k) % 2 == 1) c = -c;
    g[k] = c;
  }
  for (int k = 1; k <= n; ++k) gd[k - 1] = g[k] * Rational(k);
  trim(g);
  trim(gd);
  while (!gd.empty()) {
    QPoly r = remainder(g, gd);
    g = std::move(gd);
    gd = std::move(r);
  }
  return g.size() == 1;
}

BigComplex IntExpression::eval(const BigComplex& z) const {
  if (coeffs.empty()) return BigComplex();
  BigComplex r = BigComplex::from_bigint(coeffs.back());
  for (int i = degree() - 1; i >= 0; --i) {
    r *= z;
    r += BigComplex::from_bigint(coeffs[i]);
  }
  return r;
}

IntExpression parse_expression(const std::string& text) {
  // Sums of terms c, c*v^k, v^k with one variable letter; '*' optional.
  std::vector<BigInt> coeffs;
  char var = 0;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&]() -> IntExpression {
    throw RequestError("malformed root expression: " + text);
  };
  skip_ws();
  if (i == text.size()) fail();
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail();
    }
    first = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      digits += text[i++];
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      if (digits.empty()) fail();
      ++i;
      skip_ws();
    }
    long expo = 0;
    if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
      char v = text[i++];
      if (var == 0) var = v;
      if (v != var) fail();
      expo = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string ed;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          ed += text[i++];
        if (ed.empty()) fail();
        expo = std::stol(ed);
        if (expo < 0 || expo > 1000) fail();
      }
    } else if (digits.empty()) {
      fail();
    }
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    if (sign < 0) c = -c;
    if (static_cast<size_t>(expo) >= coeffs.size())
      coeffs.resize(expo + 1, BigInt(0));
    coeffs[expo] += c;
  }
  if (coeffs.empty()) fail();
  IntExpression e;
  e.coeffs = std::move(coeffs);
  while (e.coeffs.size() > 1 && e.coeffs.back() == 0) e.coeffs.pop_back();
  return e;
}

}  // namespace rootrel::numeric
