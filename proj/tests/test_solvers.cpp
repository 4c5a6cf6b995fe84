#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "subqubo/qubo_builder.hpp"
#include "subqubo/solvers.hpp"
#include "test_support.hpp"

using namespace subqubo;

namespace {

QuboMatrix example_q_prime() {
  return build_qubo(test::example_system(), {30.0, 25.0}, test::example_encoding());
}

QuboMatrix random_upper(std::mt19937_64& rng, int dim) {
  std::vector<double> entries(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      // Small integers make ties common, which exercises the minimizer set.
      entries[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)] =
          static_cast<double>(static_cast<std::int64_t>(rng() % 9) - 4);
    }
  }
  return QuboMatrix(dim, std::move(entries));
}

std::vector<Assignment> sorted_by_bits(std::vector<Assignment> assignments) {
  std::sort(assignments.begin(), assignments.end(),
            [](const Assignment& lhs, const Assignment& rhs) { return lhs.bits < rhs.bits; });
  return assignments;
}

}  // namespace

TEST_CASE("energy sums selected diagonal and coupling entries") {
  const QuboMatrix q(3, {1.0, -2.0, 4.0, 0.0, 3.0, 8.0, 0.0, 0.0, -5.0});
  CHECK(energy(q, Assignment{{0, 0, 0}}) == 0.0);
  CHECK(energy(q, Assignment{{1, 0, 0}}) == 1.0);
  CHECK(energy(q, Assignment{{1, 1, 0}}) == 1.0 - 2.0 + 3.0);
  CHECK(energy(q, Assignment{{1, 1, 1}}) == 1.0 - 2.0 + 4.0 + 3.0 + 8.0 - 5.0);
  CHECK_THROWS_AS(energy(q, Assignment{{1, 0}}), std::invalid_argument);
}

TEST_CASE("Brute force finds the unique example ground state") {
  const BruteForceResult result = brute_force_solve(example_q_prime());
  CHECK(result.min_energy == -1525.0);
  REQUIRE(result.minimizers.size() == 1);
  CHECK(result.minimizers.front() == Assignment{{1, 0, 1, 0, 1, 1, 1, 1}});
}

TEST_CASE("Brute force agrees with a full scan on random matrices") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 9);
    const QuboMatrix q = random_upper(rng, dim);

    double best = 0.0;
    std::vector<Assignment> argmin;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      const Assignment a = test::assignment_from_mask(mask, dim);
      const double e = energy(q, a);
      if (e < best) {
        best = e;
        argmin.clear();
      }
      if (e == best) argmin.push_back(a);
    }

    const BruteForceResult result = brute_force_solve(q);
    REQUIRE(result.min_energy == best);
    REQUIRE(sorted_by_bits(result.minimizers) == sorted_by_bits(argmin));
  }
}

TEST_CASE("Brute force reports every tied minimizer") {
  const QuboMatrix zero(3, std::vector<double>(9, 0.0));
  const BruteForceResult result = brute_force_solve(zero);
  CHECK(result.min_energy == 0.0);
  CHECK(result.minimizers.size() == 8);
}

TEST_CASE("Brute force refuses dimensions beyond the cap") {
  const QuboMatrix big(9, std::vector<double>(81, 0.0));
  CHECK_THROWS_AS(brute_force_solve(big, 8), std::length_error);
  CHECK(brute_force_solve(big, 9).min_energy == 0.0);

  const QuboMatrix wide(25, std::vector<double>(625, 0.0));
  CHECK_THROWS_AS(brute_force_solve(wide), std::length_error);
}

TEST_CASE("Annealing a zero matrix reports the all-zeros state once") {
  const QuboMatrix zero(4, std::vector<double>(16, 0.0));
  AnnealSchedule schedule;
  schedule.num_reads = 25;
  schedule.sweeps_per_read = 10;
  const SampleSet set = simulated_anneal(zero, schedule);
  CHECK(set.total_reads == 25);
  REQUIRE(set.records.size() == 1);
  CHECK(set.records.front().assignment == Assignment{{0, 0, 0, 0}});
  CHECK(set.records.front().energy == 0.0);
  CHECK(set.records.front().occurrences == 25);
}

TEST_CASE("Annealing reaches the example ground state") {
  AnnealSchedule schedule;
  schedule.num_reads = 50;
  schedule.seed = 1;
  const SampleSet set = simulated_anneal(example_q_prime(), schedule);
  CHECK(set.records.front().energy == -1525.0);
  CHECK(set.records.front().assignment == Assignment{{1, 0, 1, 0, 1, 1, 1, 1}});
}

TEST_CASE("Annealing is a pure function of matrix and schedule") {
  AnnealSchedule schedule;
  schedule.num_reads = 40;
  schedule.sweeps_per_read = 60;
  schedule.seed = 99;
  const QuboMatrix q = example_q_prime();
  const SampleSet first = simulated_anneal(q, schedule);
  const SampleSet second = simulated_anneal(q, schedule);
  REQUIRE(first.records.size() == second.records.size());
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    CHECK(first.records[i].assignment == second.records[i].assignment);
    CHECK(first.records[i].energy == second.records[i].energy);
    CHECK(first.records[i].occurrences == second.records[i].occurrences);
  }
}

TEST_CASE("Sample sets aggregate and order their records") {
  AnnealSchedule schedule;
  schedule.num_reads = 200;
  schedule.sweeps_per_read = 3;  // cold enough to leave local minima behind
  schedule.seed = 5;
  const SampleSet set = simulated_anneal(example_q_prime(), schedule);

  std::uint64_t total = 0;
  for (const SampleRecord& record : set.records) total += record.occurrences;
  CHECK(total == 200);
  for (std::size_t i = 1; i < set.records.size(); ++i) {
    CHECK(set.records[i - 1].energy <= set.records[i].energy);
    CHECK(set.records[i - 1].assignment != set.records[i].assignment);
  }
  for (const SampleRecord& record : set.records) {
    CHECK(record.energy == energy(example_q_prime(), record.assignment));
  }
}

TEST_CASE("Annealing validates its schedule") {
  const QuboMatrix q(1, {1.0});
  AnnealSchedule schedule;

  schedule.num_reads = 0;
  CHECK_THROWS_AS(simulated_anneal(q, schedule), std::invalid_argument);

  schedule = AnnealSchedule{};
  schedule.sweeps_per_read = 0;
  CHECK_THROWS_AS(simulated_anneal(q, schedule), std::invalid_argument);

  schedule = AnnealSchedule{};
  schedule.beta_initial = 0.0;
  CHECK_THROWS_AS(simulated_anneal(q, schedule), std::invalid_argument);

  schedule = AnnealSchedule{};
  schedule.beta_final = 0.05;  // below beta_initial
  CHECK_THROWS_AS(simulated_anneal(q, schedule), std::invalid_argument);
}

TEST_CASE("A one-sweep schedule runs at the final temperature") {
  const QuboMatrix q(2, {-1.0, 0.0, 0.0, -1.0});
  AnnealSchedule schedule;
  schedule.num_reads = 30;
  schedule.sweeps_per_read = 1;
  schedule.beta_initial = 0.5;
  schedule.beta_final = 8.0;
  const SampleSet set = simulated_anneal(q, schedule);
  CHECK(set.total_reads == 30);
  CHECK(set.records.front().energy == energy(q, set.records.front().assignment));
}
