#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "puv/errors.hpp"
#include "puv/numeric.hpp"

namespace puv {

// Dense univariate polynomial over a field K (rationals for the exact
// backend, doubles or long doubles for the floating one).  Coefficients are
// ascending; the zero polynomial is the empty list.
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(K v) { return Poly({std::move(v)}); }
  static Poly one() { return constant(K(1)); }

  void trim() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  K at(int i) const {
    return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : K(0);
  }
  const K& lead() const { return c.back(); }

  K operator()(const K& z) const {
    K acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  }

  bool operator==(const Poly&) const = default;
};

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
  std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
  std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<K>{};
  std::vector<K> out(a.c.size() + b.c.size() - 1, K(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const K& s) {
  std::vector<K> out = a.c;
  for (K& v : out) v = v * s;
  return Poly<K>(std::move(out));
}

// Euclidean division.  The leading coefficient of each partial remainder is
// cancelled exactly (set to zero rather than subtracted), so the degree drops
// every step even in floating point.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>{}, a};
  std::vector<K> rem = a.c;
  std::vector<K> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K(0));
  const K inv_lead = K(1) / b.lead();
  for (std::size_t k = quot.size(); k-- > 0;) {
    K f = rem[k + b.c.size() - 1] * inv_lead;
    quot[k] = f;
    if (f == K(0)) continue;
    for (std::size_t i = 0; i + 1 < b.c.size(); ++i) rem[k + i] -= f * b.c[i];
    rem[k + b.c.size() - 1] = K(0);
  }
  rem.resize(b.c.size() - 1);
  return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

namespace detail {

inline double abs_value(const Rational& v) {
  return std::abs(static_cast<double>(v));
}
inline double abs_value(double v) { return std::abs(v); }
inline double abs_value(long double v) { return static_cast<double>(std::abs(v)); }

}  // namespace detail

// Coefficients smaller than rel_eps times the largest one are noise from
// cancellation; drop them so the Euclidean recursion sees true degrees.
// A rel_eps of zero leaves the polynomial untouched (exact arithmetic).
template <class K>
void truncate_noise(Poly<K>& p, double rel_eps) {
  if (rel_eps <= 0 || p.is_zero()) return;
  double m = 0;
  for (const K& v : p.c) m = std::max(m, detail::abs_value(v));
  for (K& v : p.c)
    if (detail::abs_value(v) < rel_eps * m) v = K(0);
  p.trim();
}

template <class K>
struct BezoutTriple {
  Poly<K> g, s, t;  // s*a + t*b = g
};

// Extended Euclidean algorithm.  rel_eps is the relative noise floor applied
// to every remainder (zero for exact fields).
template <class K>
BezoutTriple<K> extended_euclid(const Poly<K>& a, const Poly<K>& b, double rel_eps = 0) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::one(), s1{};
  Poly<K> t0{}, t1 = Poly<K>::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    truncate_noise(r, rel_eps);
    Poly<K> s2 = s0 - q * s1;
    Poly<K> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

}  // namespace puv
