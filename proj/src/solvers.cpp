#include "subqubo/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subqubo/detail/rng.hpp"

namespace subqubo {

namespace {

bool matrix_is_integral(const QuboMatrix& q) {
  for (double v : q.entries()) {
    if (std::nearbyint(v) != v || std::abs(v) > 9007199254740992.0) return false;
  }
  return true;
}

// Couplings folded symmetric (C[i][j] = C[j][i] = Q[min][max], zero diagonal)
// so one contiguous row carries every neighbor of a bit.
std::vector<double> symmetric_couplings(const QuboMatrix& q) {
  const int dim = q.dim();
  std::vector<double> c(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const double v = q(i, j);
      c[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)] = v;
      c[static_cast<std::size_t>(j) * dim + static_cast<std::size_t>(i)] = v;
    }
  }
  return c;
}

void check_dim_match(const QuboMatrix& q, const Assignment& a, const char* where) {
  if (a.bits.size() != static_cast<std::size_t>(q.dim())) {
    throw std::invalid_argument(std::string(where) + ": assignment has " +
                                std::to_string(a.bits.size()) + " bits, matrix dim is " +
                                std::to_string(q.dim()));
  }
}

}  // namespace

double energy(const QuboMatrix& q, const Assignment& assignment) {
  check_dim_match(q, assignment, "energy");
  const int dim = q.dim();
  double acc = 0.0;
  for (int i = 0; i < dim; ++i) {
    if (assignment.bits[static_cast<std::size_t>(i)] == 0) continue;
    acc += q(i, i);
    for (int j = i + 1; j < dim; ++j) {
      if (assignment.bits[static_cast<std::size_t>(j)] != 0) acc += q(i, j);
    }
  }
  return acc;
}

BruteForceResult brute_force_solve(const QuboMatrix& q, int max_qubits) {
  const int dim = q.dim();
  if (dim > max_qubits) {
    throw std::length_error("brute_force_solve: " + std::to_string(dim) +
                            " qubits exceed the cap of " + std::to_string(max_qubits));
  }
  if (dim > 62) {
    throw std::length_error("brute_force_solve: " + std::to_string(dim) +
                            " qubits overflow the 64-bit state counter");
  }

  const bool integral = matrix_is_integral(q);
  const std::vector<double> couplings = symmetric_couplings(q);
  std::vector<double> fields(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) fields[static_cast<std::size_t>(k)] = q(k, k);

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(dim), 0);
  double e = 0.0;

  BruteForceResult result;
  result.min_energy = 0.0;  // the all-zeros state
  result.minimizers.push_back(Assignment{bits});

  // Gray-code walk: step t flips bit ctz(t), so consecutive states differ
  // in one bit and the energy moves by the local field of that bit.
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int k = std::countr_zero(t);
    const double* row = couplings.data() + static_cast<std::size_t>(k) * dim;
    const bool was_set = bits[static_cast<std::size_t>(k)] != 0;
    e += was_set ? -fields[static_cast<std::size_t>(k)] : fields[static_cast<std::size_t>(k)];
    bits[static_cast<std::size_t>(k)] = was_set ? 0 : 1;
    if (was_set) {
      for (int j = 0; j < dim; ++j) fields[static_cast<std::size_t>(j)] -= row[j];
    } else {
      for (int j = 0; j < dim; ++j) fields[static_cast<std::size_t>(j)] += row[j];
    }

    if (e <= result.min_energy) {
      // Incremental energies are exact for integral matrices; otherwise
      // re-anchor candidates with a from-scratch evaluation.
      const double exact = integral ? e : energy(q, Assignment{bits});
      if (exact < result.min_energy) {
        result.min_energy = exact;
        result.minimizers.clear();
        result.minimizers.push_back(Assignment{bits});
        e = exact;
      } else if (exact == result.min_energy) {
        result.minimizers.push_back(Assignment{bits});
      }
    }
  }
  return result;
}

SampleSet simulated_anneal(const QuboMatrix& q, const AnnealSchedule& schedule) {
  if (schedule.num_reads < 1) {
    throw std::invalid_argument("simulated_anneal: num_reads must be positive");
  }
  if (schedule.sweeps_per_read < 1) {
    throw std::invalid_argument("simulated_anneal: sweeps_per_read must be positive");
  }
  if (!(schedule.beta_initial > 0.0) || !(schedule.beta_final >= schedule.beta_initial)) {
    throw std::invalid_argument(
        "simulated_anneal: need beta_final >= beta_initial > 0, got beta_initial = " +
        std::to_string(schedule.beta_initial) + ", beta_final = " +
        std::to_string(schedule.beta_final));
  }

  const int dim = q.dim();
  const std::vector<double> couplings = symmetric_couplings(q);
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) diag[static_cast<std::size_t>(k)] = q(k, k);

  // Geometric ramp, identical for every read.
  const int sweeps = schedule.sweeps_per_read;
  std::vector<double> betas(static_cast<std::size_t>(sweeps));
  if (sweeps == 1) {
    betas[0] = schedule.beta_final;
  } else {
    const double ratio = schedule.beta_final / schedule.beta_initial;
    for (int s = 0; s < sweeps; ++s) {
      betas[static_cast<std::size_t>(s)] =
          schedule.beta_initial * std::pow(ratio, static_cast<double>(s) / (sweeps - 1));
    }
  }

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(dim));
  std::vector<double> fields(static_cast<std::size_t>(dim));
  std::vector<std::uint8_t> best_bits(static_cast<std::size_t>(dim));

  // Deterministic aggregation: count per-read best assignments in a
  // lexicographically ordered map, independent of read execution order.
  std::map<std::vector<std::uint8_t>, std::uint64_t> counts;

  for (std::uint64_t read = 0; read < schedule.num_reads; ++read) {
    std::mt19937_64 rng(detail::mix64(schedule.seed, read));
    std::fill(bits.begin(), bits.end(), std::uint8_t{0});
    fields = diag;
    double e = 0.0;
    double best_e = 0.0;  // the all-zeros starting state
    std::fill(best_bits.begin(), best_bits.end(), std::uint8_t{0});

    for (int s = 0; s < sweeps; ++s) {
      const double beta = betas[static_cast<std::size_t>(s)];
      for (int step = 0; step < dim; ++step) {
        const auto k = static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(dim)));
        const bool was_set = bits[static_cast<std::size_t>(k)] != 0;
        const double delta =
            was_set ? -fields[static_cast<std::size_t>(k)] : fields[static_cast<std::size_t>(k)];
        const bool accept =
            delta <= 0.0 ||
            (beta * delta < 50.0 && detail::uniform_real01(rng) < std::exp(-beta * delta));
        if (!accept) continue;
        const double* row = couplings.data() + static_cast<std::size_t>(k) * dim;
        bits[static_cast<std::size_t>(k)] = was_set ? 0 : 1;
        if (was_set) {
          for (int j = 0; j < dim; ++j) fields[static_cast<std::size_t>(j)] -= row[j];
        } else {
          for (int j = 0; j < dim; ++j) fields[static_cast<std::size_t>(j)] += row[j];
        }
        e += delta;
        if (e < best_e) {
          best_e = e;
          best_bits = bits;
        }
      }
    }
    ++counts[best_bits];
  }

  SampleSet result;
  result.total_reads = schedule.num_reads;
  result.records.reserve(counts.size());
  for (auto& [assignment_bits, occurrences] : counts) {
    Assignment a{assignment_bits};
    const double exact = energy(q, a);  // stored energies are recomputed, not accumulated
    result.records.push_back(SampleRecord{std::move(a), exact, occurrences});
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const SampleRecord& lhs, const SampleRecord& rhs) {
                     if (lhs.energy != rhs.energy) return lhs.energy < rhs.energy;
                     return lhs.assignment.bits < rhs.assignment.bits;
                   });
  return result;
}

}  // namespace subqubo
