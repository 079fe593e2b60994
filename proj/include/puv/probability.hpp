#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "puv/errors.hpp"
#include "puv/numeric.hpp"
#include "puv/poly.hpp"

namespace puv {

// Per-scalar-type policy: how to detect the poles of the direct formula.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static bool deltas_collide(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  // Within 1e-9 relative distance two variances are treated as a double pole.
  static bool deltas_collide(double a, double b) {
    return std::abs(a - b) < 1e-9 * std::max(std::abs(a), std::abs(b));
  }
};

// Variances of the two competing sums: U = sum of |CN(0, chi_i)|^2 terms,
// V = sum of |CN(0, delta_j)|^2 terms, all components independent.
template <class K>
struct VarianceProfile {
  std::vector<K> chi, delta;

  VarianceProfile() = default;
  VarianceProfile(std::vector<K> chi_, std::vector<K> delta_)
      : chi(std::move(chi_)), delta(std::move(delta_)) {
    if (chi.empty() || chi.size() != delta.size())
      throw DomainError("chi and delta must be nonempty and of equal length");
    for (const K& v : chi)
      if (!(v > K(0))) throw DomainError("variances must be positive");
    for (const K& v : delta)
      if (!(v > K(0))) throw DomainError("variances must be positive");
  }

  int size() const { return static_cast<int>(chi.size()); }
};

template <class K>
void require_distinct_deltas(const std::vector<K>& delta) {
  for (std::size_t k = 0; k < delta.size(); ++k)
    for (std::size_t l = k + 1; l < delta.size(); ++l)
      if (ScalarOps<K>::deltas_collide(delta[k], delta[l])) throw DuplicateDeltaError();
}

// P(U < V) by direct partial fractions over the poles delta_k:
//   P = sum_k prod_{j != k} (1 - delta_j/delta_k)^-1 prod_j (1 + chi_j/delta_k)^-1.
// Requires pairwise distinct deltas; accurate only while they stay well
// separated.
template <class K>
K barett_direct(const VarianceProfile<K>& p) {
  require_distinct_deltas(p.delta);
  K sum(0);
  for (std::size_t k = 0; k < p.delta.size(); ++k) {
    K term(1);
    for (std::size_t j = 0; j < p.delta.size(); ++j)
      if (j != k) term = term / (K(1) - p.delta[j] / p.delta[k]);
    for (std::size_t j = 0; j < p.chi.size(); ++j)
      term = term / (K(1) + p.chi[j] / p.delta[k]);
    sum += term;
  }
  return sum;
}

// X(z) = prod_i (1 - chi_i z), Delta(z) = prod_i (1 + delta_i z): the
// characteristic-polynomial factors of the two sums.  Both have constant
// term 1 and degree N.
template <class K>
std::pair<Poly<K>, Poly<K>> build_x_delta(const VarianceProfile<K>& p) {
  Poly<K> x = Poly<K>::one();
  Poly<K> d = Poly<K>::one();
  for (const K& v : p.chi) x = x * Poly<K>(std::vector<K>{K(1), K(0) - v});
  for (const K& v : p.delta) d = d * Poly<K>(std::vector<K>{K(1), v});
  return {x, d};
}

template <class K>
struct BezoutPair {
  Poly<K> pi, mu;  // pi*X + mu*Delta = 1, deg pi <= deg Delta - 1
};

namespace detail {

// Shared skeleton: run the extended Euclidean algorithm on (x, d), demand a
// constant gcd, and normalize the cofactors by it.
template <class K>
BezoutTriple<K> coprime_bezout(const Poly<K>& x, const Poly<K>& d, double rel_eps) {
  BezoutTriple<K> e = extended_euclid(x, d, rel_eps);
  if (e.g.degree() != 0) throw NotCoprimeError();
  const K g = e.g.lead();
  e.s = e.s * (K(1) / g);
  e.t = e.t * (K(1) / g);
  e.g = Poly<K>::one();
  return e;
}

}  // namespace detail

inline BezoutPair<Rational> bezout_pi(const Poly<Rational>& x, const Poly<Rational>& d) {
  auto e = detail::coprime_bezout<Rational>(x, d, 0);
  if (e.s.degree() >= d.degree() && d.degree() >= 1) {
    // Reduce to the canonical representative of degree < deg Delta.
    e.s = divmod(e.s, d).second;
    auto [mu, rem] = divmod(Poly<Rational>::one() - e.s * x, d);
    if (!rem.is_zero()) throw NotCoprimeError();
    e.t = mu;
  }
  return {e.s, e.t};
}

// Floating variant.  Computed in long double with the variable rescaled by
// the geometric mean of the leading coefficients, which keeps the Euclidean
// remainders near unit scale; remainder coefficients below 1e-12 of the
// largest are truncated as cancellation noise.
inline BezoutPair<double> bezout_pi(const Poly<double>& x, const Poly<double>& d) {
  using LD = long double;
  const int nx = x.degree(), nd = d.degree();
  if (nx < 0 || nd < 0) throw DomainError("polynomial division by zero");
  LD lead_scale = std::abs(static_cast<LD>(x.lead())) * std::abs(static_cast<LD>(d.lead()));
  LD gamma = std::pow(lead_scale, LD(1) / (nx + nd));
  if (!(gamma > 0) || !std::isfinite(static_cast<double>(gamma))) gamma = 1;

  auto rescale = [gamma](const Poly<double>& p) {
    std::vector<LD> c(p.c.size());
    LD w = 1;
    for (std::size_t i = 0; i < p.c.size(); ++i, w /= gamma) c[i] = p.c[i] * w;
    return Poly<LD>(std::move(c));
  };
  auto e = detail::coprime_bezout<LD>(rescale(x), rescale(d), 1e-12);

  auto unscale = [gamma](const Poly<LD>& p) {
    std::vector<double> c(p.c.size());
    LD w = 1;
    for (std::size_t i = 0; i < p.c.size(); ++i, w *= gamma)
      c[i] = static_cast<double>(p.c[i] * w);
    return Poly<double>(std::move(c));
  };
  return {unscale(e.s), unscale(e.t)};
}

// P(U < V) via the Bezout identity: with pi*X + mu*Delta = 1, the probability
// is the constant coefficient pi(0).  No poles, no duplicate-variance
// restriction, and numerically stable under the floating backend.
template <class K>
K prob_stable(const VarianceProfile<K>& p) {
  auto [x, d] = build_x_delta(p);
  return bezout_pi(x, d).pi.at(0);
}

// Largest coefficient of pi*X + mu*Delta - 1, measured relative to the
// largest coefficient of the two products; zero for the exact backend, and a
// direct certificate of the identity's quality for the floating one. The
// normalization makes the certificate meaningful for wide profiles, where the
// products carry coefficients far above 1.
template <class K>
double bezout_residual(const Poly<K>& x, const Poly<K>& d, const BezoutPair<K>& bz) {
  Poly<K> px = bz.pi * x;
  Poly<K> md = bz.mu * d;
  Poly<K> r = px + md - Poly<K>::one();
  double scale = 1;
  for (const K& v : px.c) scale = std::max(scale, detail::abs_value(v));
  for (const K& v : md.c) scale = std::max(scale, detail::abs_value(v));
  double m = 0;
  for (const K& v : r.c) m = std::max(m, detail::abs_value(v));
  return m / scale;
}

struct MonteCarloResult {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

}  // namespace puv
