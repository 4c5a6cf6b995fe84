// Command line front end: generate, build, solve, sweep, export, verify.
// Exit codes: 0 hit found or build success, 1 no hit, 2 usage/parse error.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subqubo/problem_io.hpp"
#include "subqubo/problem_model.hpp"
#include "subqubo/qubo_builder.hpp"
#include "subqubo/solvers.hpp"
#include "subqubo/subrange_search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitHit = 0;
constexpr int kExitNoHit = 1;
constexpr int kExitUsage = 2;

struct SolverFlags {
  std::string solver = "brute";
  std::uint64_t reads = 1000;
  int sweeps = 200;
  double beta_initial = 0.1;
  double beta_final = 10.0;
  std::uint64_t seed = 0;
  int cap = subqubo::kDefaultBruteForceCap;
};

void add_solver_flags(CLI::App* cmd, SolverFlags* flags) {
  cmd->add_option("--solver", flags->solver, "Solver: exhaustive search or simulated annealing")
      ->check(CLI::IsMember({"brute", "sa"}))
      ->capture_default_str();
  cmd->add_option("--reads", flags->reads, "Annealing reads")->capture_default_str();
  cmd->add_option("--sweeps", flags->sweeps, "Sweeps per read")->capture_default_str();
  cmd->add_option("--beta-initial", flags->beta_initial, "Initial inverse temperature")
      ->capture_default_str();
  cmd->add_option("--beta-final", flags->beta_final, "Final inverse temperature")
      ->capture_default_str();
  cmd->add_option("--seed", flags->seed, "Annealing RNG seed")->capture_default_str();
  cmd->add_option("--cap", flags->cap, "Qubit cap for the exhaustive solver")
      ->capture_default_str();
}

subqubo::AnnealSchedule schedule_of(const SolverFlags& flags) {
  subqubo::AnnealSchedule schedule;
  schedule.num_reads = flags.reads;
  schedule.sweeps_per_read = flags.sweeps;
  schedule.beta_initial = flags.beta_initial;
  schedule.beta_final = flags.beta_final;
  schedule.seed = flags.seed;
  return schedule;
}

std::string format_vector(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += subqubo::format_number(values[i]);
  }
  return out + "]";
}

std::string format_vector(const std::vector<std::int64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string bit_string(const subqubo::Assignment& assignment) {
  std::string out;
  out.reserve(assignment.bits.size());
  for (std::uint8_t bit : assignment.bits) out += static_cast<char>('0' + bit);
  return out;
}

json bits_json(const subqubo::Assignment& assignment) {
  json out = json::array();
  for (std::uint8_t bit : assignment.bits) out.push_back(static_cast<int>(bit));
  return out;
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("\"" + path + "\": " + e.what());
  }
}

// A problem file carries "A"; a raw QUBO file carries "entries".
bool is_problem_json(const json& j) { return j.is_object() && j.contains("A"); }

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::runtime_error("cannot parse \"" + item + "\" as a number");
    }
    pos = comma + 1;
  }
  return values;
}

bool matches_target(double best, double target, bool integral) {
  if (integral) return best == target;
  return std::abs(best - target) <= 1e-6 * std::max(1.0, std::abs(target));
}

struct GenArgs {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::int64_t entry_min = -10;
  std::int64_t entry_max = 9;
  std::int64_t x_min = -128;
  std::int64_t x_max = 126;
  int qubits_per_var = 4;
  std::int64_t bound = 0;  // 0 means "omit the subrange block"
  bool as_json = false;
};

int run_gen(const GenArgs& args) {
  auto [system, x_true] = subqubo::gen_random(args.n, {args.entry_min, args.entry_max},
                                              {args.x_min, args.x_max}, args.seed);
  subqubo::ProblemFile file;
  file.n = args.n;
  file.a = system.a();
  file.b = system.b();
  file.lo = 0;
  file.hi = args.qubits_per_var - 1;
  if (args.bound > 0) file.s = args.bound;
  subqubo::save_problem(file, args.out);

  if (args.as_json) {
    json out = {{"path", args.out}, {"n", args.n}, {"x_true", x_true}, {"b", system.b()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "wrote " << args.out << '\n';
    std::cout << "x_true: " << format_vector(x_true) << '\n';
  }
  return kExitHit;
}

struct BuildArgs {
  std::string problem;
  std::string out;
  bool as_json = false;
};

int run_build(const BuildArgs& args) {
  const subqubo::ProblemFile file = subqubo::load_problem(args.problem);
  const subqubo::LinearSystem system = subqubo::system_of(file);
  const subqubo::BinaryEncoding encoding = subqubo::encoding_of(file);
  const subqubo::SubrangeSpec spec = subqubo::subrange_spec_of(file).value_or(
      subqubo::SubrangeSpec::zero(file.n, encoding));
  const subqubo::EffectiveRhs rhs = subqubo::effective_rhs(system, spec);
  const subqubo::QuboMatrix q = subqubo::build_qubo(system, rhs.c(), encoding);

  if (!args.out.empty()) subqubo::save_qubo(q, args.out);
  if (args.as_json) {
    json out = subqubo::qubo_to_json(q);
    out["T"] = spec.translation();
    out["target_energy"] = rhs.target_energy();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "qubits: " << q.dim() << '\n';
    std::cout << "T: " << format_vector(spec.translation()) << '\n';
    std::cout << "target_energy: " << subqubo::format_number(rhs.target_energy()) << '\n';
    for (int i = 0; i < q.dim(); ++i) {
      for (int j = i; j < q.dim(); ++j) {
        if (q(i, j) == 0.0) continue;
        std::cout << "Q[" << i << "][" << j << "] = " << subqubo::format_number(q(i, j)) << '\n';
      }
    }
    if (!args.out.empty()) std::cout << "wrote " << args.out << '\n';
  }
  return kExitHit;
}

struct SolveArgs {
  std::string input;
  SolverFlags flags;
  bool as_json = false;
};

struct SolveOutcome {
  double best_energy = 0.0;
  subqubo::Assignment best;
  std::uint64_t occurrences = 0;  // 0 for the exhaustive solver
  std::size_t distinct = 0;
};

SolveOutcome dispatch_solver(const subqubo::QuboMatrix& q, const SolverFlags& flags) {
  SolveOutcome outcome;
  if (flags.solver == "brute") {
    subqubo::BruteForceResult r = subqubo::brute_force_solve(q, flags.cap);
    outcome.best_energy = r.min_energy;
    outcome.best = r.minimizers.front();
    outcome.distinct = r.minimizers.size();
  } else {
    subqubo::SampleSet set = subqubo::simulated_anneal(q, schedule_of(flags));
    outcome.best_energy = set.records.front().energy;
    outcome.best = set.records.front().assignment;
    outcome.occurrences = set.records.front().occurrences;
    outcome.distinct = set.records.size();
  }
  return outcome;
}

int run_solve(const SolveArgs& args) {
  const json input = parse_file(args.input);
  const std::string context = "\"" + args.input + "\"";

  if (!is_problem_json(input)) {
    const subqubo::QuboMatrix q = subqubo::qubo_from_json(input, context);
    const SolveOutcome outcome = dispatch_solver(q, args.flags);
    if (args.as_json) {
      json out = {{"qubits", q.dim()},
                  {"best_energy", outcome.best_energy},
                  {"assignment", bits_json(outcome.best)}};
      if (outcome.occurrences > 0) out["occurrences"] = outcome.occurrences;
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "qubits: " << q.dim() << '\n';
      std::cout << "best_energy: " << subqubo::format_number(outcome.best_energy) << '\n';
      std::cout << "assignment: " << bit_string(outcome.best) << '\n';
    }
    return kExitHit;
  }

  const subqubo::ProblemFile file = subqubo::problem_from_json(input, context);
  const subqubo::LinearSystem system = subqubo::system_of(file);
  const subqubo::BinaryEncoding encoding = subqubo::encoding_of(file);
  const subqubo::SubrangeSpec spec = subqubo::subrange_spec_of(file).value_or(
      subqubo::SubrangeSpec::zero(file.n, encoding));
  const subqubo::EffectiveRhs rhs = subqubo::effective_rhs(system, spec);
  const subqubo::QuboMatrix q = subqubo::build_qubo(system, rhs.c(), encoding);

  const SolveOutcome outcome = dispatch_solver(q, args.flags);
  const std::vector<double> x = subqubo::decode(outcome.best, encoding, spec);
  const bool hit = matches_target(outcome.best_energy, rhs.target_energy(), system.is_integral());

  if (args.as_json) {
    json out = {{"qubits", q.dim()},
                {"T", spec.translation()},
                {"target_energy", rhs.target_energy()},
                {"best_energy", outcome.best_energy},
                {"assignment", bits_json(outcome.best)},
                {"x", x},
                {"hit", hit}};
    if (outcome.occurrences > 0) out["occurrences"] = outcome.occurrences;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "qubits: " << q.dim() << '\n';
    std::cout << "T: " << format_vector(spec.translation()) << '\n';
    std::cout << "target_energy: " << subqubo::format_number(rhs.target_energy()) << '\n';
    std::cout << "best_energy: " << subqubo::format_number(outcome.best_energy) << '\n';
    std::cout << "assignment: " << bit_string(outcome.best) << '\n';
    std::cout << "x: " << format_vector(x) << '\n';
    std::cout << "hit: " << (hit ? "yes" : "no") << '\n';
  }
  return hit ? kExitHit : kExitNoHit;
}

struct SweepArgs {
  std::string problem;
  std::int64_t bound = 0;  // 0 means "take s from the file"
  SolverFlags flags;
  bool stop_on_hit = false;
  std::string out;
  bool as_json = false;
};

int run_sweep(const SweepArgs& args) {
  const subqubo::ProblemFile file = subqubo::load_problem(args.problem);
  const subqubo::LinearSystem system = subqubo::system_of(file);
  const subqubo::BinaryEncoding encoding = subqubo::encoding_of(file);

  std::int64_t bound = args.bound;
  if (bound <= 0) bound = file.s.value_or(0);
  if (bound <= 0) {
    throw std::runtime_error("no subrange bound: pass --subrange-bound or store \"s\" in " +
                             args.problem);
  }

  subqubo::SweepOptions options;
  options.solver = args.flags.solver == "brute" ? subqubo::SolverKind::kBruteForce
                                                : subqubo::SolverKind::kSimulatedAnnealing;
  options.schedule = schedule_of(args.flags);
  options.brute_force_cap = args.flags.cap;
  options.stop_on_hit = args.stop_on_hit;

  const subqubo::SweepReport report = subqubo::sweep(system, encoding, bound, options);
  if (!args.out.empty()) subqubo::save_report(report, args.out);

  if (args.as_json) {
    std::cout << subqubo::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "subranges: " << report.total_subranges << '\n';
    std::cout << "evaluated: " << report.per_subrange.size() << '\n';
    std::cout << "hits: " << report.hits.size() << '\n';
    for (std::size_t index : report.hits) {
      const subqubo::SubrangeResult& entry = report.per_subrange[index];
      std::cout << "hit: T = " << format_vector(entry.spec.translation())
                << ", x = " << format_vector(entry.solution)
                << ", energy = " << subqubo::format_number(entry.best_energy) << '\n';
    }
    if (report.hits.empty()) {
      const subqubo::SubrangeResult& entry = report.per_subrange[report.approximate_index];
      std::cout << "approximate: T = " << format_vector(entry.spec.translation())
                << ", x = " << format_vector(entry.solution)
                << ", best_energy = " << subqubo::format_number(entry.best_energy)
                << ", target_energy = " << subqubo::format_number(entry.target_energy) << '\n';
    }
    if (!args.out.empty()) std::cout << "wrote " << args.out << '\n';
  }
  return report.hits.empty() ? kExitNoHit : kExitHit;
}

struct ExportArgs {
  std::string input;
  std::uint64_t reads = 1000;
  std::string out;
};

int run_export(const ExportArgs& args) {
  const json input = parse_file(args.input);
  const std::string context = "\"" + args.input + "\"";

  std::optional<subqubo::QuboMatrix> q;
  if (is_problem_json(input)) {
    const subqubo::ProblemFile file = subqubo::problem_from_json(input, context);
    const subqubo::LinearSystem system = subqubo::system_of(file);
    const subqubo::BinaryEncoding encoding = subqubo::encoding_of(file);
    const subqubo::SubrangeSpec spec = subqubo::subrange_spec_of(file).value_or(
        subqubo::SubrangeSpec::zero(file.n, encoding));
    q = subqubo::build_qubo(system, subqubo::effective_rhs(system, spec).c(), encoding);
  } else {
    q = subqubo::qubo_from_json(input, context);
  }

  const std::string script = subqubo::export_sampler_script(*q, args.reads);
  if (args.out.empty()) {
    std::cout << script;
  } else {
    write_text_file(script, args.out);
    std::cout << "wrote " << args.out << '\n';
  }
  return kExitHit;
}

struct VerifyArgs {
  std::string problem;
  std::string x_text;
  bool as_json = false;
};

int run_verify(const VerifyArgs& args) {
  const subqubo::ProblemFile file = subqubo::load_problem(args.problem);
  const subqubo::LinearSystem system = subqubo::system_of(file);
  const std::vector<double> x = parse_number_list(args.x_text);
  const double residual = subqubo::verify_solution(system, x);

  bool exact = false;
  if (system.is_integral()) {
    bool x_integral = true;
    for (double v : x) {
      if (std::nearbyint(v) != v) x_integral = false;
    }
    exact = x_integral ? residual == 0.0 : residual <= 1e-6;
  } else {
    double scale = 1.0;
    for (double v : system.b()) scale += v * v;
    exact = residual <= 1e-6 * scale;
  }

  if (args.as_json) {
    json out = {{"x", x}, {"residual", residual}, {"solves", exact}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "residual: " << subqubo::format_number(residual) << '\n';
    std::cout << "solves: " << (exact ? "yes" : "no") << '\n';
  }
  return exact ? kExitHit : kExitNoHit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least-squares to QUBO via subrange translation"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random integer instance");
  gen->add_option("--n", gen_args.n, "Number of variables")->required()->check(CLI::Range(1, 64));
  gen->add_option("--seed", gen_args.seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_args.out, "Problem file to write")->required();
  gen->add_option("--entry-min", gen_args.entry_min, "Smallest matrix entry")
      ->capture_default_str();
  gen->add_option("--entry-max", gen_args.entry_max, "Largest matrix entry")
      ->capture_default_str();
  gen->add_option("--x-min", gen_args.x_min, "Smallest solution component")
      ->capture_default_str();
  gen->add_option("--x-max", gen_args.x_max, "Largest solution component")->capture_default_str();
  gen->add_option("--qubits-per-var", gen_args.qubits_per_var, "Qubits per variable")
      ->check(CLI::Range(1, 62))
      ->capture_default_str();
  gen->add_option("--subrange-bound", gen_args.bound, "Store subrange bound s in the file");
  gen->add_flag("--json", gen_args.as_json, "Machine-readable output");

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "Build the QUBO for a problem file");
  build->add_option("problem", build_args.problem, "Problem file")->required();
  build->add_option("--out", build_args.out, "QUBO file to write");
  build->add_flag("--json", build_args.as_json, "Machine-readable output");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one subrange or a raw QUBO");
  solve->add_option("input", solve_args.input, "Problem or QUBO file")->required();
  add_solver_flags(solve, &solve_args.flags);
  solve->add_flag("--json", solve_args.as_json, "Machine-readable output");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Search every subrange for the solution");
  sweep->add_option("problem", sweep_args.problem, "Problem file")->required();
  sweep->add_option("--subrange-bound", sweep_args.bound,
                    "Subrange bound s (overrides the file)");
  add_solver_flags(sweep, &sweep_args.flags);
  sweep->add_flag("--stop-on-hit", sweep_args.stop_on_hit, "Stop at the first hit");
  sweep->add_option("--out", sweep_args.out, "Report file to write");
  sweep->add_flag("--json", sweep_args.as_json, "Machine-readable output");

  ExportArgs export_args;
  CLI::App* exp = app.add_subcommand("export", "Emit a D-Wave-style sampler script");
  exp->add_option("input", export_args.input, "Problem or QUBO file")->required();
  exp->add_option("--reads", export_args.reads, "num_reads in the sampler call")
      ->capture_default_str();
  exp->add_option("--out", export_args.out, "Script file to write");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Residual of a claimed solution");
  verify->add_option("problem", verify_args.problem, "Problem file")->required();
  verify->add_option("--x", verify_args.x_text, "Comma-separated solution, e.g. \"21,-17\"")
      ->required();
  verify->add_flag("--json", verify_args.as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(gen_args);
    if (*build) return run_build(build_args);
    if (*solve) return run_solve(solve_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*exp) return run_export(export_args);
    if (*verify) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
