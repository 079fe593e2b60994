#include "puv/kernels.hpp"

#include <cmath>
#include <random>

#include "puv/errors.hpp"
#include "puv/schur.hpp"

namespace puv {
namespace {

constexpr std::uint64_t kBlock = 1u << 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream position -> generator seed; distinct positions decorrelate.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t position) {
  return splitmix64(seed ^ splitmix64(position + 1));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

ZeroOneMatrix matrix_from_bits(int n, std::uint64_t bits) {
  std::vector<std::uint8_t> b(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = (bits >> i) & 1;
  return ZeroOneMatrix(n, std::move(b));
}

// First-row length of the insertion tableau of matrix index `bits`, without
// building tableau objects: just the final number of columns.
bool full_first_row(int n, std::uint64_t bits) {
  detail::ColumnList cl;
  std::size_t cell = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j, ++cell)
      if ((bits >> cell) & 1) cl.insert(j);
  return static_cast<int>(cl.cols.size()) == n;
}

}  // namespace

BigInt count_s1_fillings(int n, ExecMode mode) {
  if (n < 1 || n > 5) throw DomainError("exhaustive matrix scan supports 1 <= n <= 5");
  const std::int64_t total = std::int64_t(1) << (n * n);
  std::int64_t hits = 0;
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (std::int64_t m = 0; m < total; ++m)
      hits += full_first_row(n, static_cast<std::uint64_t>(m)) ? 1 : 0;
  } else {
    for (std::int64_t m = 0; m < total; ++m)
      hits += full_first_row(n, static_cast<std::uint64_t>(m)) ? 1 : 0;
  }
  return BigInt(hits);
}

BigInt count_s1_fillings_reference(int n) {
  if (n < 1 || n > 4) throw DomainError("the reference scan supports 1 <= n <= 4");
  const std::uint64_t total = std::uint64_t(1) << (n * n);
  BigInt hits = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    SquareFilling s = phi(matrix_from_bits(n, m));
    if (s.delta_tab.num_cols() == n) ++hits;
  }
  return hits;
}

BigInt count_square_fillings(int n, ExecMode mode) {
  if (n < 1 || n > kMaxSchurExpansionN)
    throw DomainError("the full expansion is only enumerated for n <= 3");
  return count_s1_fillings(n, mode);
}

ZeroOneMatrix random_matrix(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1 || n > 8) throw DomainError("random matrices support 1 <= n <= 8");
  std::mt19937_64 rng(stream_seed(seed, index));
  std::uint64_t bits = rng();
  std::vector<std::uint8_t> b(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = (bits >> i) & 1;
  return ZeroOneMatrix(n, std::move(b));
}

namespace {

template <class Fail>
std::uint64_t count_failures(std::uint64_t samples, ExecMode mode, Fail&& fails) {
  std::uint64_t bad = 0;
  const auto total = static_cast<std::int64_t>(samples);
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (std::int64_t i = 0; i < total; ++i)
      bad += fails(static_cast<std::uint64_t>(i)) ? 1 : 0;
  } else {
    for (std::int64_t i = 0; i < total; ++i)
      bad += fails(static_cast<std::uint64_t>(i)) ? 1 : 0;
  }
  return bad;
}

}  // namespace

std::uint64_t count_roundtrip_failures(int n, std::uint64_t samples, std::uint64_t seed,
                                       ExecMode mode) {
  return count_failures(samples, mode, [n, seed](std::uint64_t i) {
    ZeroOneMatrix m = random_matrix(n, seed, i);
    return !(phi_inverse(phi(m)) == m);
  });
}

std::uint64_t count_symmetry_mismatches(int n, std::uint64_t samples, std::uint64_t seed,
                                        ExecMode mode) {
  return count_failures(samples, mode, [n, seed](std::uint64_t i) {
    ZeroOneMatrix m = random_matrix(n, seed, i);
    SquareFilling s = phi(m);
    TableauPair alt = alternate_phi(m);
    return !(alt.first == s.delta_tab && alt.second == s.chi_tab);
  });
}

MonteCarloResult monte_carlo(const VarianceProfile<double>& p, std::uint64_t samples,
                             std::uint64_t seed, ExecMode mode) {
  if (samples == 0) throw DomainError("sample count must be positive");
  const auto blocks = static_cast<std::int64_t>((samples + kBlock - 1) / kBlock);
  std::uint64_t hits = 0;

  auto run_block = [&p, seed, samples](std::int64_t b) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(b)));
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t count = std::min<std::uint64_t>(kBlock, samples - lo);
    std::uint64_t h = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      // |CN(0, v)|^2 is exponential with mean v; inverse-CDF sampling.
      double u = 0, v = 0;
      for (double c : p.chi) u -= c * std::log1p(-unit_uniform(rng));
      for (double d : p.delta) v -= d * std::log1p(-unit_uniform(rng));
      if (u < v) ++h;
    }
    return h;
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (std::int64_t b = 0; b < blocks; ++b) hits += run_block(b);
  } else {
    for (std::int64_t b = 0; b < blocks; ++b) hits += run_block(b);
  }

  MonteCarloResult r;
  r.samples = samples;
  r.seed = seed;
  r.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
  return r;
}

}  // namespace puv
