#pragma once

#include <cstdint>
#include <vector>

#include "subqubo/problem_model.hpp"

namespace subqubo {

/// Exhaustive search refuses above this many qubits unless the caller
/// raises the cap; 2^24 states stay within a few seconds.
inline constexpr int kDefaultBruteForceCap = 24;

/// Classical annealing schedule: independent reads of single-bit-flip
/// Metropolis sweeps under a geometric inverse-temperature ramp.
struct AnnealSchedule {
  std::uint64_t num_reads = 1000;
  int sweeps_per_read = 200;
  double beta_initial = 0.1;
  double beta_final = 10.0;
  std::uint64_t seed = 0;
};

/// QUBO energy sum_i Q_ii a_i + sum_{i<j} Q_ij a_i a_j.
double energy(const QuboMatrix& q, const Assignment& assignment);

struct BruteForceResult {
  double min_energy = 0.0;
  std::vector<Assignment> minimizers;  // every assignment attaining the minimum
};

/// Exact global minimum over all 2^dim assignments (Gray-code walk with
/// incremental energy deltas). Throws when dim exceeds max_qubits.
BruteForceResult brute_force_solve(const QuboMatrix& q, int max_qubits = kDefaultBruteForceCap);

/// num_reads independent anneals; each starts from the all-zeros state,
/// proposes random single-bit flips (dim per sweep) under the geometric
/// beta ramp, and reports the lowest-energy state it visited. Per-read
/// RNG streams come from the master seed by counter splitting, so the
/// result is a pure function of (q, schedule) regardless of thread count.
SampleSet simulated_anneal(const QuboMatrix& q, const AnnealSchedule& schedule);

}  // namespace subqubo
