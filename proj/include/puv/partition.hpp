#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "puv/errors.hpp"

namespace puv {

// Integer partition, stored as weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
  }

  // i-th part (0-based), zero beyond the last part.
  int part(int i) const {
    return i >= 0 && i < static_cast<int>(parts.size()) ? parts[i] : 0;
  }
  int num_parts() const { return static_cast<int>(parts.size()); }
  int cell_count() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool fits_in_square(int n) const {
    return num_parts() <= n && (parts.empty() || parts[0] <= n);
  }

  bool operator==(const Partition&) const = default;
};

inline Partition conjugate(const Partition& p) {
  if (p.parts.empty()) return Partition{};
  std::vector<int> cols(static_cast<std::size_t>(p.parts[0]), 0);
  for (int part : p.parts)
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

// Complement of the 180-degree rotation of the diagram inside the n x n square:
// nu_i = n - lambda_{n+1-i} with lambda padded by zeros to n parts.
inline Partition rotated_complement(const Partition& p, int n) {
  if (n < 0 || !p.fits_in_square(n))
    throw DomainError("partition does not fit in the given square");
  std::vector<int> nu;
  for (int i = n - 1; i >= 0; --i)
    if (int v = n - p.part(i); v > 0) nu.push_back(v);
  return Partition(std::move(nu));
}

// Complementary shape: the conjugate of the rotated complement.  A tableau of
// this shape is exactly what fills the cells of the n x n square left empty by
// a (conjugated) tableau of shape p.
inline Partition complement(const Partition& p, int n) {
  return conjugate(rotated_complement(p, n));
}

// All partitions with at most max_parts parts, each at most max_part,
// in no particular order; includes the empty partition.
inline std::vector<Partition> partitions_in_rectangle(int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining_rows, int cap) {
    out.emplace_back(Partition(cur));
    if (remaining_rows == 0) return;
    for (int v = cap; v >= 1; --v) {
      cur.push_back(v);
      rec(remaining_rows - 1, v);
      cur.pop_back();
    }
  };
  rec(std::max(max_parts, 0), std::max(max_part, 0));
  return out;
}

}  // namespace puv
