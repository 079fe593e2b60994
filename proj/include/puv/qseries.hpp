#pragma once

#include <utility>
#include <vector>

#include "puv/errors.hpp"
#include "puv/numeric.hpp"

namespace puv {

// Polynomial in q with integer coefficients, ascending powers, no trailing
// zeros.  The zero polynomial is the empty coefficient list.
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly constant(BigInt v) { return IntPoly({std::move(v)}); }
  static IntPoly monomial(BigInt coeff, int k) {
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, BigInt(0));
    v.back() = std::move(coeff);
    return IntPoly(std::move(v));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const BigInt& at(int i) const {
    static const BigInt zero(0);
    return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : zero;
  }

  bool operator==(const IntPoly&) const = default;
};

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return IntPoly(std::move(out));
}

inline IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
  return IntPoly(std::move(out));
}

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<BigInt> out(a.c.size() + b.c.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(out));
}

// Exact division by a monic divisor; throws if the division leaves a remainder.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (b.c.back() != 1) throw DomainError("exact division requires a monic divisor");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) throw DomainError("division is not exact");
  std::vector<BigInt> rem = a.c;
  std::vector<BigInt> quot(a.c.size() - b.c.size() + 1, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt lead = rem[k + b.c.size() - 1];
    quot[k] = lead;
    if (lead == 0) continue;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem[k + i] -= lead * b.c[i];
  }
  for (const BigInt& r : rem)
    if (r != 0) throw DomainError("division is not exact");
  return IntPoly(std::move(quot));
}

inline Rational eval_poly(const IntPoly& p, const Rational& q) {
  Rational acc(0);
  for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * q + Rational(p.c[i]);
  return acc;
}

// [n]_q = 1 + q + ... + q^(n-1)
inline IntPoly q_integer(int n) {
  if (n <= 0) throw DomainError("q-integer index must be positive");
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
inline IntPoly q_factorial(int n) {
  if (n < 0) throw DomainError("q-factorial index must be nonnegative");
  IntPoly acc = IntPoly::constant(1);
  for (int k = 1; k <= n; ++k) acc = acc * q_integer(k);
  return acc;
}

// Gaussian binomial coefficient [n choose m]_q; a genuine polynomial because
// the denominator divides the numerator exactly.
inline IntPoly gaussian_binomial(int n, int m) {
  if (n < 0 || m < 0 || m > n) throw DomainError("gaussian binomial requires 0 <= m <= n");
  return divide_exact(q_factorial(n), q_factorial(m) * q_factorial(n - m));
}

// Both sides of the q-binomial expansion
//   sum_{j=0}^{n} [n, j]_q (-1)^j q^(j(j+1)/2)  =  prod_{k=1}^{n} (1 - q^k),
// the z = q specialization of the classical expansion of prod (1 - z q^k).
inline std::pair<IntPoly, IntPoly> q_newton_check(int n) {
  if (n < 1) throw DomainError("q-expansion check requires n >= 1");
  IntPoly lhs;
  for (int j = 0; j <= n; ++j) {
    BigInt sign = (j % 2 == 0) ? 1 : -1;
    lhs = lhs + IntPoly::monomial(sign, j * (j + 1) / 2) * gaussian_binomial(n, j);
  }
  IntPoly rhs = IntPoly::constant(1);
  for (int k = 1; k <= n; ++k)
    rhs = rhs * (IntPoly::constant(1) - IntPoly::monomial(1, k));
  return {lhs, rhs};
}

// Partial-fraction identity: for n >= 1 and t > 0, t != 1,
//   sum_{k=1}^{n} [ prod_{j != k} 1/(1 - t^(j-k)) ] [ prod_{j=1}^{n} 1/(1 + t^(j-k)) ]
// collapses to 1/2 independently of n and t.
inline Rational partial_fraction_sum(int n, const Rational& t) {
  if (n < 1) throw DomainError("the identity requires n >= 1");
  if (t <= 0 || t == 1) throw DomainError("the identity requires t > 0, t != 1");
  Rational sum(0);
  for (int k = 1; k <= n; ++k) {
    Rational term(1);
    for (int j = 1; j <= n; ++j) {
      if (j != k) term /= Rational(1) - pow_rational(t, j - k);
      term /= Rational(1) + pow_rational(t, j - k);
    }
    sum += term;
  }
  return sum;
}

// The telescoped partial-fraction identity
//   sum_{k=1}^{n} prod_{j != k} 1/(1 - q^(j-k))  =  1
// cleared of denominators: multiplying through by prod_{i=1}^{n-1} (1 - q^i)
// turns the sum side into sum_{j=0}^{n-1} [n-1, j]_q (-1)^j q^(j(j+1)/2)
// (returned as lhs) and the right side into that same product (rhs).
inline std::pair<IntPoly, IntPoly> euler_sum_check(int n) {
  if (n < 1) throw DomainError("the summation check requires n >= 1");
  IntPoly lhs;
  for (int j = 0; j <= n - 1; ++j) {
    BigInt sign = (j % 2 == 0) ? 1 : -1;
    lhs = lhs + IntPoly::monomial(sign, j * (j + 1) / 2) * gaussian_binomial(n - 1, j);
  }
  IntPoly rhs = IntPoly::constant(1);
  for (int j = 1; j <= n - 1; ++j)
    rhs = rhs * (IntPoly::constant(1) - IntPoly::monomial(1, j));
  return {lhs, rhs};
}

// Number of n x n 0/1 matrices whose insertion tableau has a full first row:
// 2^(n^2 - 1), i.e. exactly half of all matrices.
inline BigInt alpha(int n) {
  if (n < 1) throw DomainError("alpha is defined for n >= 1");
  return pow_bigint(2, static_cast<unsigned long>(n) * n - 1);
}

}  // namespace puv
