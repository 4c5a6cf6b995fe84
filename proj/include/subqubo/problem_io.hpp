#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "subqubo/problem_model.hpp"
#include "subqubo/subrange_search.hpp"

namespace subqubo {

/// Closed integer interval [lo, hi].
struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// On-disk problem description (JSON, schema_version 1):
///   {"schema_version": 1, "n": 2, "A": [3,1,-1,2], "b": [46,-55],
///    "encoding": {"lo": 0, "hi": 3}, "subrange": {"s": 4, "T": [16,-32]}}
/// "subrange" is optional, as is each of its members.
struct ProblemFile {
  int schema_version = 1;
  int n = 0;
  std::vector<double> a;  // row-major n*n
  std::vector<double> b;
  int lo = 0;
  int hi = 0;
  std::optional<std::int64_t> s;
  std::optional<std::vector<std::int64_t>> t;

  bool operator==(const ProblemFile&) const = default;
};

ProblemFile problem_from_json(const nlohmann::json& j, const std::string& context);
nlohmann::json problem_to_json(const ProblemFile& file);
ProblemFile load_problem(const std::string& path);
void save_problem(const ProblemFile& file, const std::string& path);

/// Views into the validated domain objects a file describes.
LinearSystem system_of(const ProblemFile& file);
BinaryEncoding encoding_of(const ProblemFile& file);
/// The explicit subrange, when "T" is present. The bound is taken from "s"
/// or, failing that, the smallest s that admits every coefficient.
std::optional<SubrangeSpec> subrange_spec_of(const ProblemFile& file);

/// Random integer instance with known solution: A entries uniform over
/// entry_range, ground-truth x uniform over x_range, b = A*x. Identical
/// (seed, shape) give identical instances on every platform.
std::pair<LinearSystem, std::vector<double>> gen_random(int n, IntInterval entry_range,
                                                        IntInterval x_range, std::uint64_t seed);

/// Shortest exact decimal text: integers without a fraction part,
/// everything else with round-trip precision.
std::string format_number(double v);

/// Python script for a D-Wave-style sampler run: `linear` holds every
/// diagonal entry keyed ('qK','qK') with 1-based K, `quadratic` the nonzero
/// off-diagonal couplers, merged into Q and sampled with num_reads.
std::string export_sampler_script(const QuboMatrix& q, std::uint64_t num_reads);

/// Dense QUBO (de)serialization: {"schema_version": 1, "dim": d,
/// "entries": [row-major d*d]}.
nlohmann::json qubo_to_json(const QuboMatrix& q);
QuboMatrix qubo_from_json(const nlohmann::json& j, const std::string& context);
QuboMatrix load_qubo(const std::string& path);
void save_qubo(const QuboMatrix& q, const std::string& path);

/// Sweep report with per-subrange {T, target_energy, best_energy,
/// assignment, x, hit} plus the hit indices and tolerance actually used.
nlohmann::json report_to_json(const SweepReport& report);
void save_report(const SweepReport& report, const std::string& path);

}  // namespace subqubo
