#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "puv/errors.hpp"
#include "puv/numeric.hpp"
#include "puv/partition.hpp"
#include "puv/probability.hpp"
#include "puv/tableau.hpp"

namespace puv {

// Exponent vectors of one monomial delta^a chi^b in n pairs of variables.
struct ExponentMonomial {
  std::vector<int> delta_exp, chi_exp;
  auto operator<=>(const ExponentMonomial&) const = default;
};

// Integer-coefficient polynomial in the 2n variables delta_1..n, chi_1..n.
struct MultiPoly {
  std::map<ExponentMonomial, BigInt> terms;

  void add(const ExponentMonomial& m, const BigInt& coeff) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (coeff != 0) terms.emplace(m, coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }

  bool operator==(const MultiPoly&) const = default;
};

// Visit every semistandard tableau of the given shape with entries in
// 1..max_entry, built cell by cell (rows weakly increase, columns strictly
// increase upward), in lexicographic order of the reading word.
template <class Visitor>
void enumerate_tableaux(const Partition& shape, int max_entry, Visitor&& visit) {
  if (max_entry < 0) throw DomainError("alphabet size must be nonnegative");
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(shape.num_parts()));
  for (int r = 0; r < shape.num_parts(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);

  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == shape.num_parts()) {
      visit(static_cast<const std::vector<std::vector<int>>&>(rows));
      return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == shape.part(r)) {
      ++next_r;
      next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && c < shape.part(r - 1))
      lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(next_r, next_c);
    }
  };
  if (shape.num_parts() == 0)
    visit(static_cast<const std::vector<std::vector<int>>&>(rows));
  else
    rec(0, 0);
}

inline std::vector<Tableau> list_tableaux(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  enumerate_tableaux(shape, max_entry,
                     [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(Tableau(rows)); });
  return out;
}

// Schur polynomial s_shape(values): sum over semistandard tableaux of the
// product of values[entry - 1] over all cells.
template <class K>
K schur_eval(const Partition& shape, const std::vector<K>& values) {
  const int n = static_cast<int>(values.size());
  K sum(0);
  enumerate_tableaux(shape, n, [&](const std::vector<std::vector<int>>& rows) {
    K prod(1);
    for (const auto& row : rows)
      for (int v : row) prod *= values[static_cast<std::size_t>(v - 1)];
    sum += prod;
  });
  return sum;
}

// Largest n for which the full bivariate expansion is enumerated directly;
// the number of tableau pairs grows like 2^(n^2).
inline constexpr int kMaxSchurExpansionN = 3;

// F(chi, delta) = P(U < V) * prod_{i,j} (chi_i + delta_j) expanded as
//   sum over shapes (n, lambda), lambda inside the (n-1) x n rectangle, of
//   s_(n,lambda)(delta) s_complement(chi),
// with the complement taken inside the n x n square.  Exposed as an explicit
// multivariate polynomial.
inline MultiPoly f_schur(int n) {
  if (n < 1) throw DomainError("the expansion requires n >= 1");
  if (n > kMaxSchurExpansionN)
    throw DomainError("the full expansion is only enumerated for n <= 3");
  MultiPoly f;
  for (const Partition& lambda : partitions_in_rectangle(n - 1, n)) {
    std::vector<int> dparts{n};
    dparts.insert(dparts.end(), lambda.parts.begin(), lambda.parts.end());
    Partition dshape(std::move(dparts));
    Partition cshape = complement(dshape, n);

    std::vector<std::vector<int>> dcontents, ccontents;
    enumerate_tableaux(dshape, n, [&](const std::vector<std::vector<int>>& rows) {
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      for (const auto& row : rows)
        for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
      dcontents.push_back(std::move(content));
    });
    enumerate_tableaux(cshape, n, [&](const std::vector<std::vector<int>>& rows) {
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      for (const auto& row : rows)
        for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
      ccontents.push_back(std::move(content));
    });
    for (const auto& d : dcontents)
      for (const auto& c : ccontents) f.add({d, c}, 1);
  }
  return f;
}

template <class K>
K eval_multipoly(const MultiPoly& f, const std::vector<K>& delta, const std::vector<K>& chi) {
  K sum(0);
  for (const auto& [mon, coeff] : f.terms) {
    if (mon.delta_exp.size() != delta.size() || mon.chi_exp.size() != chi.size())
      throw DomainError("evaluation point has the wrong number of variables");
    K prod = static_cast<K>(coeff);
    for (std::size_t i = 0; i < delta.size(); ++i)
      for (int e = 0; e < mon.delta_exp[i]; ++e) prod *= delta[i];
    for (std::size_t i = 0; i < chi.size(); ++i)
      for (int e = 0; e < mon.chi_exp[i]; ++e) prod *= chi[i];
    sum += prod;
  }
  return sum;
}

// The same quantity from the probability side: F = P(U < V) with the product
// of all pairwise sums cleared, computed by the direct pole expansion.
inline Rational f_from_barett(const std::vector<Rational>& chi,
                              const std::vector<Rational>& delta) {
  VarianceProfile<Rational> p(chi, delta);
  Rational f = barett_direct(p);
  for (const Rational& ci : chi)
    for (const Rational& dj : delta) f *= ci + dj;
  return f;
}

// Product substitution count: evaluating every chi_i at t^i and delta_j at
// t^j turns F into half the full product, so
//   F(t^1..t^n; t^1..t^n) = (1/2) prod_{i,j} (t^i + t^j).
inline Rational t_substitution_count(int n, const Rational& t) {
  if (n < 1) throw DomainError("the substitution requires n >= 1");
  if (t <= 0) throw DomainError("the substitution requires t > 0");
  Rational prod(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) prod *= pow_rational(t, i) + pow_rational(t, j);
  return prod / 2;
}

// Collapse every delta_i to one value d and every chi_i to one value c: the
// expansion becomes sum_k coeff[k] d^k c^(n^2-k).  Returned as the vector of
// coeff[k] for k = 0..n^2.
inline std::vector<BigInt> specialize_two_values(int n) {
  MultiPoly f = f_schur(n);
  std::vector<BigInt> out(static_cast<std::size_t>(n) * n + 1, BigInt(0));
  for (const auto& [mon, coeff] : f.terms) {
    int ddeg = 0;
    for (int e : mon.delta_exp) ddeg += e;
    out[static_cast<std::size_t>(ddeg)] += coeff;
  }
  return out;
}

}  // namespace puv
