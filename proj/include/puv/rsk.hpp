#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "puv/errors.hpp"
#include "puv/tableau.hpp"

namespace puv {

struct ZeroOneMatrix {
  int n = 0;
  std::vector<std::uint8_t> bits;  // row-major

  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(int n_) : n(n_), bits(static_cast<std::size_t>(n_) * n_, 0) {
    if (n_ < 0) throw DomainError("matrix size must be nonnegative");
  }
  ZeroOneMatrix(int n_, std::vector<std::uint8_t> b) : n(n_), bits(std::move(b)) {
    if (n_ < 0 || bits.size() != static_cast<std::size_t>(n_) * n_)
      throw DomainError("matrix bit vector has the wrong length");
    for (auto v : bits)
      if (v > 1) throw DomainError("matrix entries must be 0 or 1");
  }

  // 1-based indices throughout, matching the (i, j) biletter convention.
  std::uint8_t at(int i, int j) const {
    return bits[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }
  void set(int i, int j, std::uint8_t v) {
    bits[static_cast<std::size_t>(i - 1) * n + (j - 1)] = v;
  }

  bool operator==(const ZeroOneMatrix&) const = default;
};

// Biletters (u, v), kept lexicographically sorted with distinct pairs.
struct TwoRowArray {
  std::vector<std::pair<int, int>> pairs;

  TwoRowArray() = default;
  explicit TwoRowArray(std::vector<std::pair<int, int>> p) : pairs(std::move(p)) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first < 1 || pairs[i].second < 1)
        throw DomainError("biletter entries must be positive");
      if (i > 0 && !(pairs[i - 1] < pairs[i]))
        throw DomainError("biletters must be strictly increasing lexicographically");
    }
  }
};

struct BoxPosition {
  int row = 0;  // 0-based height within the column
  int col = 0;  // 0-based column index
  bool operator==(const BoxPosition&) const = default;
};

struct InsertionTrace {
  std::vector<BoxPosition> boxes;  // where each letter created its new box
};

namespace detail {

// Column word w(M): scan rows top to bottom (i = 1..n), each row left to
// right, emitting (i, j) for every 1.
inline std::vector<std::pair<int, int>> matrix_biletters(const ZeroOneMatrix& m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (m.at(i, j)) out.emplace_back(i, j);
  return out;
}

// Mutable column-list view of a tableau, for repeated insertions without
// re-validating on every step.
struct ColumnList {
  std::vector<std::vector<int>> cols;

  ColumnList() = default;
  explicit ColumnList(const Tableau& t) : cols(columns_of(t)) {}

  Tableau to_tableau() const {
    auto trimmed = cols;
    while (!trimmed.empty() && trimmed.back().empty()) trimmed.pop_back();
    return tableau_from_columns(trimmed);
  }

  // Column bumping: x lands at the top of the first column if strictly larger
  // than everything there; otherwise it replaces the smallest entry >= x,
  // which is bumped into the next column by the same rule.
  BoxPosition insert(int x) {
    int carry = x;
    for (std::size_t j = 0;; ++j) {
      if (j == cols.size()) cols.emplace_back();
      auto& col = cols[j];
      auto it = std::lower_bound(col.begin(), col.end(), carry);
      if (it == col.end()) {
        col.push_back(carry);
        return {static_cast<int>(col.size()) - 1, static_cast<int>(j)};
      }
      std::swap(carry, *it);
    }
  }

  // Inverse of insert: remove the box at pos (which must be a removable outer
  // corner) and unwind the bumping path leftwards, returning the letter that
  // was originally inserted.  Throws if pos is not removable.
  int remove(BoxPosition pos) {
    auto j = static_cast<std::size_t>(pos.col);
    if (j >= cols.size() || cols[j].size() != static_cast<std::size_t>(pos.row) + 1)
      throw DomainError("box is not the top of its column");
    if (j + 1 < cols.size() && cols[j + 1].size() > static_cast<std::size_t>(pos.row))
      throw DomainError("box is not an outer corner");
    int carry = cols[j].back();
    cols[j].pop_back();
    while (!cols.empty() && cols.back().empty()) cols.pop_back();
    for (std::size_t k = j; k-- > 0;) {
      auto& col = cols[k];
      auto it = std::upper_bound(col.begin(), col.end(), carry);
      if (it == col.begin())
        throw DomainError("reverse bumping path broke: filling is not in the image");
      --it;
      std::swap(carry, *it);
    }
    return carry;
  }
};

}  // namespace detail

inline TwoRowArray matrix_to_word(const ZeroOneMatrix& m) {
  return TwoRowArray(detail::matrix_biletters(m));
}

inline std::pair<Tableau, BoxPosition> column_insert(const Tableau& t, int x) {
  if (x < 1) throw DomainError("inserted letters must be positive");
  detail::ColumnList cl(t);
  BoxPosition pos = cl.insert(x);
  return {cl.to_tableau(), pos};
}

inline std::pair<Tableau, int> column_insert_reverse(const Tableau& t, BoxPosition pos) {
  detail::ColumnList cl(t);
  int x = cl.remove(pos);
  return {cl.to_tableau(), x};
}

// Column insertion of a plain word, letters in the given order.
inline Tableau insert_word(const std::vector<int>& word) {
  detail::ColumnList cl;
  for (int x : word) {
    if (x < 1) throw DomainError("inserted letters must be positive");
    cl.insert(x);
  }
  return cl.to_tableau();
}

struct KnuthResult {
  Tableau t1;  // insertion tableau, built from the bottom letters v
  Tableau t2;  // recording tableau of conjugate shape, labelled by the top letters u
  TwoRowArray word;
  InsertionTrace trace;
};

// Column-insertion Knuth correspondence for a 0/1 matrix: insert the bottom
// letters of w(M) into T1; each new box (r, c) is recorded in T2 at the
// transposed position (c, r) with the top letter as label.
inline KnuthResult knuth_forward(const ZeroOneMatrix& m) {
  KnuthResult res;
  res.word = matrix_to_word(m);
  detail::ColumnList cl;
  std::map<std::pair<int, int>, int> record;  // (row, col) of T2 -> label
  for (auto [u, v] : res.word.pairs) {
    BoxPosition pos = cl.insert(v);
    res.trace.boxes.push_back(pos);
    record[{pos.col, pos.row}] = u;
  }
  res.t1 = cl.to_tableau();

  Partition shape2 = conjugate(res.t1.shape());
  std::vector<std::vector<int>> rows2;
  for (int r = 0; r < shape2.num_parts(); ++r)
    rows2.emplace_back(static_cast<std::size_t>(shape2.part(r)), 0);
  for (auto& [cell, label] : record) rows2[static_cast<std::size_t>(cell.first)]
                                          [static_cast<std::size_t>(cell.second)] = label;
  res.t2 = Tableau(std::move(rows2));
  return res;
}

// Inverse correspondence.  Boxes are removed in reverse insertion order:
// labels descending, and within one label by T2 column descending (that run of
// boxes was created left to right in T2 while the label's biletters arrived in
// increasing v).  Throws DomainError when (t1, t2) is not in the image.
inline ZeroOneMatrix knuth_inverse(const Tableau& t1, const Tableau& t2, int n) {
  if (!(conjugate(t1.shape()) == t2.shape()))
    throw DomainError("recording tableau shape must be conjugate to the insertion shape");
  if (t1.max_entry() > n || t2.max_entry() > n)
    throw DomainError("tableau entries exceed the matrix size");

  struct Removal {
    int label, t2row, t2col;
  };
  std::vector<Removal> order;
  for (std::size_t r = 0; r < t2.rows.size(); ++r)
    for (std::size_t c = 0; c < t2.rows[r].size(); ++c)
      order.push_back({t2.rows[r][c], static_cast<int>(r), static_cast<int>(c)});
  std::sort(order.begin(), order.end(), [](const Removal& a, const Removal& b) {
    if (a.label != b.label) return a.label > b.label;
    return a.t2col > b.t2col;
  });

  detail::ColumnList cl(t1);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& box : order) {
    int v = cl.remove({box.t2col, box.t2row});
    pairs.emplace_back(box.label, v);
  }
  if (!cl.cols.empty()) throw DomainError("insertion tableau was not fully consumed");
  std::reverse(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].second > n)
      throw DomainError("recovered biletter exceeds the matrix size");
    if (i > 0 && !(pairs[i - 1] < pairs[i]))
      throw DomainError("recovered biletters are not strictly increasing: "
                        "filling is not in the image");
  }

  ZeroOneMatrix m(n);
  for (auto [u, v] : pairs) m.set(u, v, 1);
  return m;
}

// The square-filling bijection: matrices M correspond to pairs (T1, comp(T2))
// assembled into one n x n square.
inline SquareFilling phi(const ZeroOneMatrix& m) {
  KnuthResult k = knuth_forward(m);
  return SquareFilling(m.n, k.t1, complement_tableau(k.t2, m.n));
}

inline ZeroOneMatrix phi_inverse(const SquareFilling& s) {
  Tableau t2 = complement_tableau(s.chi_tab, s.n);
  return knuth_inverse(s.delta_tab, t2, s.n);
}

// w1: bottom letters of the biletters of M (the 1-cells, row-major).
// w2: row indices of the 0-cells of M, scanned column by column.
inline std::pair<std::vector<int>, std::vector<int>> words_w1_w2(const ZeroOneMatrix& m) {
  std::vector<int> w1, w2;
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (m.at(i, j)) w1.push_back(j);
  for (int j = 1; j <= m.n; ++j)
    for (int i = 1; i <= m.n; ++i)
      if (!m.at(i, j)) w2.push_back(i);
  return {std::move(w1), std::move(w2)};
}

struct TableauPair {
  Tableau first, second;
  bool operator==(const TableauPair&) const = default;
};

// Direct construction of the same square filling: insert w1 for the delta
// tableau and w2 for the chi tableau.  Agrees with phi on every matrix.
inline TableauPair alternate_phi(const ZeroOneMatrix& m) {
  auto [w1, w2] = words_w1_w2(m);
  return {insert_word(w1), insert_word(w2)};
}

}  // namespace puv
