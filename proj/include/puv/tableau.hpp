#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "puv/errors.hpp"
#include "puv/partition.hpp"

namespace puv {

// A strictly increasing set of entries from {1..ambient_n}, read bottom to top.
struct Column {
  int ambient_n = 0;
  std::vector<int> entries;

  Column() = default;
  Column(int n, std::vector<int> e) : ambient_n(n), entries(std::move(e)) {
    if (n < 0) throw DomainError("column alphabet size must be nonnegative");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] < 1 || entries[i] > ambient_n)
        throw DomainError("column entry out of range");
      if (i > 0 && entries[i] <= entries[i - 1])
        throw DomainError("column entries must be strictly increasing");
    }
  }

  int height() const { return static_cast<int>(entries.size()); }
  bool operator==(const Column&) const = default;
};

// Entries of {1..ambient_n} not present in c, again strictly increasing.
inline Column column_complement(const Column& c) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(c.ambient_n - c.height()));
  std::size_t k = 0;
  for (int v = 1; v <= c.ambient_n; ++v) {
    if (k < c.entries.size() && c.entries[k] == v)
      ++k;
    else
      out.push_back(v);
  }
  return Column(c.ambient_n, std::move(out));
}

// Gluing order on columns: a <= b iff b is no taller than a and a[k] <= b[k]
// at every level k of b, i.e. a can stand immediately to the left of b in a
// semistandard tableau.
inline bool column_leq(const Column& a, const Column& b) {
  if (a.ambient_n != b.ambient_n)
    throw DomainError("column comparison requires a common alphabet");
  if (b.height() > a.height()) return false;
  for (int k = 0; k < b.height(); ++k)
    if (a.entries[static_cast<std::size_t>(k)] > b.entries[static_cast<std::size_t>(k)])
      return false;
  return true;
}

// Row filling of a partition shape.  rows[0] is the bottom (longest) row;
// within a column, entries are read upward as the row index grows.
struct Tabloid {
  std::vector<std::vector<int>> rows;

  Tabloid() = default;
  explicit Tabloid(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) throw DomainError("tabloid rows must be nonempty");
      if (i > 0 && rows[i].size() > rows[i - 1].size())
        throw DomainError("tabloid row lengths must be weakly decreasing upward");
      for (int v : rows[i])
        if (v < 1) throw DomainError("tabloid entries must be positive");
    }
  }

  Partition shape() const {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
  }
  int cell_count() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
  }
  int max_entry() const {
    int m = 0;
    for (const auto& r : rows)
      for (int v : r) m = std::max(m, v);
    return m;
  }
};

// Semistandard: rows weakly increase left to right, columns strictly increase
// bottom to top.
inline bool is_young_tableau(const Tabloid& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      if (row[j] > row[j + 1]) return false;
    if (i > 0)
      for (std::size_t j = 0; j < row.size(); ++j)
        if (t.rows[i - 1][j] >= row[j]) return false;
  }
  return true;
}

// Semistandard Young tableau; the constructor enforces semistandardness.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r) {
    Tabloid tb(std::move(r));
    if (!is_young_tableau(tb)) throw DomainError("filling is not a Young tableau");
    rows = std::move(tb.rows);
  }

  Partition shape() const {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
  }
  int cell_count() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
  }
  int max_entry() const {
    int m = 0;
    for (const auto& r : rows)
      for (int v : r) m = std::max(m, v);
    return m;
  }
  int num_cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  bool empty() const { return rows.empty(); }

  // Multiplicity of each letter 1..n.
  std::vector<int> content(int n) const {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& r : rows)
      for (int v : r) {
        if (v > n) throw DomainError("tableau entry exceeds alphabet size");
        ++c[static_cast<std::size_t>(v - 1)];
      }
    return c;
  }

  bool operator==(const Tableau&) const = default;
};

// Column representation: result[j] holds column j bottom to top.  Pads with
// empty columns up to min_slots so callers can treat the tableau as sitting in
// a fixed-width box.
inline std::vector<std::vector<int>> columns_of(const Tableau& t, int min_slots = 0) {
  int width = std::max(t.num_cols(), min_slots);
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(width));
  for (const auto& row : t.rows)
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  return cols;
}

inline Tableau tableau_from_columns(const std::vector<std::vector<int>>& cols) {
  std::size_t height = 0;
  for (const auto& c : cols) height = std::max(height, c.size());
  std::vector<std::vector<int>> rows(height);
  for (const auto& c : cols) {
    for (std::size_t i = 0; i < c.size(); ++i) rows[i].push_back(c[i]);
  }
  return Tableau(std::move(rows));
}

// Column-by-column complement inside the n x n square: column j of the result
// (0-based, counted from the left) is the complement of column n-1-j of the
// input.  Involutive, and sends semistandard tableaux to semistandard tableaux
// of the complementary shape.
inline Tableau complement_tableau(const Tableau& t, int n) {
  if (!t.shape().fits_in_square(n) || t.max_entry() > n)
    throw DomainError("tableau does not fit in the given square");
  auto in = columns_of(t, n);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Column src(n, in[static_cast<std::size_t>(n - 1 - j)]);
    out[static_cast<std::size_t>(j)] = column_complement(src).entries;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return tableau_from_columns(out);
}

// An n x n square tiled by a delta-labelled tableau (anchored bottom left) and
// a chi-labelled tableau whose rows fill the remaining cells column by column
// from the right: square column c (1-based from the left) takes chi row
// n+1-c, written bottom to top.
struct SquareFilling {
  int n = 0;
  Tableau delta_tab;
  Tableau chi_tab;

  SquareFilling() = default;
  SquareFilling(int n_, Tableau d, Tableau c)
      : n(n_), delta_tab(std::move(d)), chi_tab(std::move(c)) {
    if (n < 0) throw DomainError("square size must be nonnegative");
    if (delta_tab.max_entry() > n || chi_tab.max_entry() > n)
      throw DomainError("square filling entries must lie in 1..n");
    if (!delta_tab.shape().fits_in_square(n))
      throw DomainError("delta tableau does not fit in the square");
    if (!(complement(delta_tab.shape(), n) == chi_tab.shape()))
      throw DomainError("chi tableau shape is not complementary to the delta shape");
  }

  bool operator==(const SquareFilling&) const = default;
};

// Rows of the filled square, top row first; delta cells print as "d<entry>",
// chi cells as "c<entry>".
inline std::vector<std::string> render_square(const SquareFilling& s) {
  Partition lambda = s.delta_tab.shape();
  Partition heights = conjugate(lambda);
  std::vector<std::string> out;
  for (int row = s.n; row >= 1; --row) {
    std::string line;
    for (int col = 1; col <= s.n; ++col) {
      if (!line.empty()) line += ' ';
      if (col <= lambda.part(row - 1)) {
        line += 'd';
        line += std::to_string(s.delta_tab.rows[static_cast<std::size_t>(row - 1)]
                                               [static_cast<std::size_t>(col - 1)]);
      } else {
        const auto& chi_row = s.chi_tab.rows[static_cast<std::size_t>(s.n - col)];
        int pos = row - heights.part(col - 1) - 1;
        line += 'c';
        line += std::to_string(chi_row[static_cast<std::size_t>(pos)]);
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace puv
