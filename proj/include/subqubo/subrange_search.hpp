#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subqubo/problem_model.hpp"
#include "subqubo/solvers.hpp"

namespace subqubo {

/// Sweeps refuse to enumerate more subranges than this; (2s)^n grows fast
/// and each one costs a full solve.
inline constexpr std::uint64_t kMaxSubranges = std::uint64_t{1} << 20;

enum class SolverKind { kBruteForce, kSimulatedAnnealing };

struct SweepOptions {
  SolverKind solver = SolverKind::kBruteForce;
  AnnealSchedule schedule;  // consulted for the SA solver only
  int brute_force_cap = kDefaultBruteForceCap;
  bool stop_on_hit = false;
};

/// Outcome for one subrange: the translated problem's target energy -c.c,
/// the solver's best energy and assignment, and the decoded x candidate.
struct SubrangeResult {
  SubrangeSpec spec;
  double target_energy = 0.0;
  double best_energy = 0.0;
  Assignment best_assignment;
  std::vector<double> solution;  // decode(best_assignment) incl. translation
  bool hit = false;
};

struct SweepReport {
  std::vector<SubrangeResult> per_subrange;  // enumeration order; truncated
                                             // after the first hit when
                                             // stop_on_hit was requested
  std::vector<std::size_t> hits;             // indices into per_subrange
  std::size_t approximate_index = 0;         // smallest best-target gap; the
                                             // answer to report when hits is
                                             // empty
  double relative_tolerance = 0.0;           // 0 means exact matching
  std::uint64_t total_subranges = 0;         // (2s)^n, even if truncated
};

/// All (2s)^n translation vectors for n variables, each coefficient running
/// -s..s-1, in lexicographic order (last variable fastest). Requires an
/// integer-mode encoding (lo = 0).
std::vector<SubrangeSpec> enumerate_subranges(int n, const BinaryEncoding& encoding,
                                              std::int64_t s);

/// ||A x - b||^2; zero exactly when x solves the system.
double verify_solution(const LinearSystem& system, const std::vector<double>& x);

/// Builds the QUBO once at T = 0 (c = b), then walks every subrange via the
/// linear-term update, solves each, and flags the ones whose best energy
/// matches that subrange's own -c.c: exactly for integral systems, within
/// 1e-6 * max(1, |target|) otherwise.
SweepReport sweep(const LinearSystem& system, const BinaryEncoding& encoding, std::int64_t s,
                  const SweepOptions& options = {});

}  // namespace subqubo
