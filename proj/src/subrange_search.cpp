#include "subqubo/subrange_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "subqubo/detail/rng.hpp"
#include "subqubo/qubo_builder.hpp"

namespace subqubo {

namespace {

// (2s)^n with overflow and capacity checks.
std::uint64_t subrange_count(int n, std::int64_t s) {
  if (s < 1) throw std::invalid_argument("subrange bound must be at least 1");
  const auto per_var = static_cast<std::uint64_t>(2 * s);
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > kMaxSubranges / per_var) {
      throw std::length_error("subrange grid (2s)^n exceeds the capacity of " +
                              std::to_string(kMaxSubranges) + " subranges");
    }
    count *= per_var;
  }
  return count;
}

// Lexicographic successor over coefficient tuples in [-s, s-1]^n, last
// index fastest. Returns false after the last tuple.
bool advance(std::vector<std::int64_t>& coeffs, std::int64_t s) {
  for (auto i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] < s - 1) {
      ++coeffs[i];
      std::fill(coeffs.begin() + static_cast<std::ptrdiff_t>(i) + 1, coeffs.end(), -s);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<SubrangeSpec> enumerate_subranges(int n, const BinaryEncoding& encoding,
                                              std::int64_t s) {
  if (n < 1) throw std::invalid_argument("enumerate_subranges: n must be positive");
  encoding.subrange_width();  // rejects fractional encodings
  const std::uint64_t count = subrange_count(n, s);

  std::vector<SubrangeSpec> specs;
  specs.reserve(count);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), -s);
  do {
    specs.push_back(SubrangeSpec::from_coefficients(coeffs, s, encoding));
  } while (advance(coeffs, s));
  return specs;
}

double verify_solution(const LinearSystem& system, const std::vector<double>& x) {
  const std::vector<double> ax = system.apply(x);  // checks the dimension
  double acc = 0.0;
  for (int k = 0; k < system.n(); ++k) {
    const double r = ax[static_cast<std::size_t>(k)] - system.b()[static_cast<std::size_t>(k)];
    acc += r * r;
  }
  return acc;
}

SweepReport sweep(const LinearSystem& system, const BinaryEncoding& encoding, std::int64_t s,
                  const SweepOptions& options) {
  encoding.subrange_width();  // rejects fractional encodings
  const int n = system.n();
  const int dim = n * encoding.bits_per_var();
  if (options.solver == SolverKind::kBruteForce && dim > options.brute_force_cap) {
    throw std::length_error("sweep: " + std::to_string(dim) +
                            " qubits exceed the brute-force cap of " +
                            std::to_string(options.brute_force_cap));
  }

  const std::uint64_t count = subrange_count(n, s);
  const bool integral = system.is_integral();

  SweepReport report;
  report.total_subranges = count;
  report.relative_tolerance = integral ? 0.0 : 1e-6;
  report.per_subrange.reserve(count);

  // Off-diagonal couplings never depend on c, so one build at T = 0
  // (c = b) seeds every subrange via the diagonal-only update.
  const SubrangeSpec zero = SubrangeSpec::zero(n, encoding);
  const EffectiveRhs base_rhs = effective_rhs(system, zero);
  const QuboMatrix base_q = build_qubo(system, base_rhs.c(), encoding);

  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), -s);
  std::uint64_t index = 0;
  do {
    const SubrangeSpec spec = SubrangeSpec::from_coefficients(coeffs, s, encoding);
    const EffectiveRhs rhs = effective_rhs(system, spec);
    const QuboMatrix q =
        update_linear_for_subrange(base_q, system, base_rhs.c(), rhs.c(), encoding);

    SubrangeResult entry{spec, rhs.target_energy(), 0.0, Assignment{}, {}, false};

    if (options.solver == SolverKind::kBruteForce) {
      BruteForceResult r = brute_force_solve(q, options.brute_force_cap);
      entry.best_energy = r.min_energy;
      entry.best_assignment = std::move(r.minimizers.front());
    } else {
      AnnealSchedule per_subrange = options.schedule;
      per_subrange.seed = detail::mix64(options.schedule.seed, index);
      SampleSet set = simulated_anneal(q, per_subrange);
      entry.best_energy = set.records.front().energy;
      entry.best_assignment = std::move(set.records.front().assignment);
    }

    entry.solution = decode(entry.best_assignment, encoding, spec);
    if (integral) {
      entry.hit = entry.best_energy == entry.target_energy;
    } else {
      const double tol = 1e-6 * std::max(1.0, std::abs(entry.target_energy));
      entry.hit = std::abs(entry.best_energy - entry.target_energy) <= tol;
    }

    const bool stop = entry.hit && options.stop_on_hit;
    if (entry.hit) report.hits.push_back(report.per_subrange.size());
    report.per_subrange.push_back(std::move(entry));
    if (stop) break;
    ++index;
  } while (advance(coeffs, s));

  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.per_subrange.size(); ++i) {
    const double gap = report.per_subrange[i].best_energy - report.per_subrange[i].target_energy;
    if (gap < best_gap) {
      best_gap = gap;
      report.approximate_index = i;
    }
  }
  return report;
}

}  // namespace subqubo
