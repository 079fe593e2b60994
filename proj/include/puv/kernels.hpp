#pragma once

#include <cstdint>

#include "puv/numeric.hpp"
#include "puv/probability.hpp"
#include "puv/rsk.hpp"

namespace puv {

// Every kernel has a serial reference path and an OpenMP path.  Both produce
// bit-identical results: work is split into fixed blocks with per-block
// deterministic state, and only integer tallies cross thread boundaries.
enum class ExecMode { Serial, Parallel };

// Reported alongside every Monte Carlo estimate so runs can be reproduced.
inline constexpr const char* kMonteCarloRng = "mt19937_64";

// Count n x n 0/1 matrices whose insertion tableau has a full first row,
// scanning all 2^(n^2) matrices.  Capped at n <= 5 (32 million matrices).
BigInt count_s1_fillings(int n, ExecMode mode);

// Same count through the full square-filling construction (build the
// complement tableau, assemble and validate the square, then test the first
// row).  Serial; the cross-check for the fast kernel.
BigInt count_s1_fillings_reference(int n);

// Exposed with the cap the expansion code uses: the matrix count must equal
// 2^(n^2 - 1) for these n, which the sum over square fillings certifies.
BigInt count_square_fillings(int n, ExecMode mode = ExecMode::Parallel);

// The index-th matrix of a reproducible random stream.
ZeroOneMatrix random_matrix(int n, std::uint64_t seed, std::uint64_t index);

// Number of random matrices (by index 0..samples-1) failing the round trip
// phi_inverse(phi(m)) == m.  Zero on every run, by design.
std::uint64_t count_roundtrip_failures(int n, std::uint64_t samples, std::uint64_t seed,
                                       ExecMode mode);

// Number of random matrices where the two-word construction disagrees with
// the insertion construction of the square filling.
std::uint64_t count_symmetry_mismatches(int n, std::uint64_t samples, std::uint64_t seed,
                                        ExecMode mode);

// Estimate P(U < V) by simulating the exponential components directly.
// Samples are drawn in fixed blocks of 65536 with a per-block generator, so
// the hit count does not depend on the thread count.
MonteCarloResult monte_carlo(const VarianceProfile<double>& p, std::uint64_t samples,
                             std::uint64_t seed, ExecMode mode = ExecMode::Parallel);

}  // namespace puv
