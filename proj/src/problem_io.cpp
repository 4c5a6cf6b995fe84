#include "subqubo/problem_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "subqubo/detail/rng.hpp"

namespace subqubo {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name, const std::string& context) {
  if (!j.is_object()) {
    throw std::runtime_error(context + ": expected an object carrying \"" + name + "\"");
  }
  const auto it = j.find(name);
  if (it == j.end()) {
    throw std::runtime_error(context + ": missing field \"" + name + "\"");
  }
  return *it;
}

std::int64_t require_int(const json& j, const char* name, const std::string& context) {
  const json& field = require_field(j, name, context);
  if (!field.is_number_integer()) {
    throw std::runtime_error(context + ": field \"" + name + "\" must be an integer");
  }
  return field.get<std::int64_t>();
}

std::vector<double> require_numbers(const json& j, const char* name, const std::string& context) {
  const json& field = require_field(j, name, context);
  if (!field.is_array()) {
    throw std::runtime_error(context + ": field \"" + name + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(field.size());
  for (const json& v : field) {
    if (!v.is_number()) {
      throw std::runtime_error(context + ": field \"" + name + "\" must hold numbers only");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json open_and_parse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("\"" + path + "\": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

}  // namespace

ProblemFile problem_from_json(const json& j, const std::string& context) {
  ProblemFile file;
  const std::int64_t version = require_int(j, "schema_version", context);
  if (version != 1) {
    throw std::runtime_error(context + ": unsupported schema_version " + std::to_string(version));
  }
  file.schema_version = 1;

  const std::int64_t n = require_int(j, "n", context);
  if (n < 1) throw std::runtime_error(context + ": field \"n\" must be positive");
  file.n = static_cast<int>(n);

  file.a = require_numbers(j, "A", context);
  if (file.a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::runtime_error(context + ": field \"A\" must hold n*n = " +
                             std::to_string(n * n) + " numbers, got " +
                             std::to_string(file.a.size()));
  }
  file.b = require_numbers(j, "b", context);
  if (file.b.size() != static_cast<std::size_t>(n)) {
    throw std::runtime_error(context + ": field \"b\" must hold n = " + std::to_string(n) +
                             " numbers, got " + std::to_string(file.b.size()));
  }

  const json& encoding = require_field(j, "encoding", context);
  file.lo = static_cast<int>(require_int(encoding, "lo", context + ", \"encoding\""));
  file.hi = static_cast<int>(require_int(encoding, "hi", context + ", \"encoding\""));

  if (const auto it = j.find("subrange"); it != j.end()) {
    const json& subrange = *it;
    const std::string sub_context = context + ", \"subrange\"";
    if (!subrange.is_object()) {
      throw std::runtime_error(sub_context + ": must be an object");
    }
    if (subrange.contains("s")) {
      file.s = require_int(subrange, "s", sub_context);
    }
    if (subrange.contains("T")) {
      const json& t = subrange.at("T");
      if (!t.is_array() || t.size() != static_cast<std::size_t>(n)) {
        throw std::runtime_error(sub_context + ": field \"T\" must be an array of n integers");
      }
      std::vector<std::int64_t> translation;
      translation.reserve(t.size());
      for (const json& v : t) {
        if (!v.is_number_integer()) {
          throw std::runtime_error(sub_context + ": field \"T\" must hold integers only");
        }
        translation.push_back(v.get<std::int64_t>());
      }
      file.t = std::move(translation);
    }
    if (!file.s && !file.t) {
      throw std::runtime_error(sub_context + ": needs \"s\" or \"T\"");
    }
  }
  return file;
}

json problem_to_json(const ProblemFile& file) {
  json j;
  j["schema_version"] = file.schema_version;
  j["n"] = file.n;
  j["A"] = file.a;
  j["b"] = file.b;
  j["encoding"] = {{"lo", file.lo}, {"hi", file.hi}};
  if (file.s || file.t) {
    json subrange = json::object();
    if (file.s) subrange["s"] = *file.s;
    if (file.t) subrange["T"] = *file.t;
    j["subrange"] = std::move(subrange);
  }
  return j;
}

ProblemFile load_problem(const std::string& path) {
  return problem_from_json(open_and_parse(path), "\"" + path + "\"");
}

void save_problem(const ProblemFile& file, const std::string& path) {
  write_json(problem_to_json(file), path);
}

LinearSystem system_of(const ProblemFile& file) {
  return LinearSystem(file.n, file.a, file.b);
}

BinaryEncoding encoding_of(const ProblemFile& file) {
  return BinaryEncoding(file.lo, file.hi);
}

std::optional<SubrangeSpec> subrange_spec_of(const ProblemFile& file) {
  if (!file.t) return std::nullopt;
  const BinaryEncoding encoding = encoding_of(file);
  const std::int64_t width = encoding.subrange_width();

  std::int64_t bound = file.s.value_or(0);
  if (!file.s) {
    // Smallest s admitting every coefficient c_i in [-s, s-1].
    bound = 1;
    for (std::int64_t t : *file.t) {
      if (t % width != 0) {
        throw std::invalid_argument("subrange translation " + std::to_string(t) +
                                    " is not a multiple of the width " + std::to_string(width));
      }
      const std::int64_t c = t / width;
      bound = std::max({bound, -c, c + 1});
    }
  }
  return SubrangeSpec(*file.t, bound, encoding);
}

std::pair<LinearSystem, std::vector<double>> gen_random(int n, IntInterval entry_range,
                                                        IntInterval x_range, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be positive");
  if (entry_range.lo > entry_range.hi || x_range.lo > x_range.hi) {
    throw std::invalid_argument("gen_random: empty range");
  }

  std::mt19937_64 rng(seed);
  const auto draw = [&rng](IntInterval r) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(r.hi) - static_cast<std::uint64_t>(r.lo) + 1;
    return r.lo + static_cast<std::int64_t>(detail::uniform_below(rng, span));
  };

  // Draw order is part of the contract: A row-major first, then x.
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (double& v : a) v = static_cast<double>(draw(entry_range));
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = static_cast<double>(draw(x_range));

  LinearSystem shape(n, a, std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<double> b = shape.apply(x);
  return {LinearSystem(n, std::move(a), std::move(b)), std::move(x)};
}

std::string format_number(double v) {
  char buf[64];
  if (std::nearbyint(v) == v && std::abs(v) <= 9007199254740992.0) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", v);
  }
  return buf;
}

std::string export_sampler_script(const QuboMatrix& q, std::uint64_t num_reads) {
  const int dim = q.dim();
  std::string out;
  out += "from dwave.system import DWaveSampler, EmbeddingComposite\n";
  out += "sampler_auto = EmbeddingComposite(DWaveSampler(solver={'qpu': True}))\n\n";

  out += "linear = {";
  for (int i = 0; i < dim; ++i) {
    const std::string label = std::to_string(i + 1);
    out += "('q" + label + "','q" + label + "'): " + format_number(q(i, i));
    out += i + 1 < dim ? ", " : " }";
  }
  out += "\n\nquadratic = {";
  bool any = false;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (q(i, j) == 0.0) continue;  // zero couplers stay out of the script
      if (any) out += ", ";
      out += "('q" + std::to_string(i + 1) + "','q" + std::to_string(j + 1) +
             "'): " + format_number(q(i, j));
      any = true;
    }
  }
  out += any ? " }" : "}";

  out += "\n\nQ = dict(linear)\nQ.update(quadratic)\n\n";
  out += "sampleset = sampler_auto.sample_qubo(Q, num_reads=" + std::to_string(num_reads) + ")\n";
  out += "print(sampleset)\n";
  return out;
}

json qubo_to_json(const QuboMatrix& q) {
  return {{"schema_version", 1}, {"dim", q.dim()}, {"entries", q.entries()}};
}

QuboMatrix qubo_from_json(const json& j, const std::string& context) {
  const std::int64_t version = require_int(j, "schema_version", context);
  if (version != 1) {
    throw std::runtime_error(context + ": unsupported schema_version " + std::to_string(version));
  }
  const std::int64_t dim = require_int(j, "dim", context);
  if (dim < 1) throw std::runtime_error(context + ": field \"dim\" must be positive");
  std::vector<double> entries = require_numbers(j, "entries", context);
  if (entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw std::runtime_error(context + ": field \"entries\" must hold dim*dim = " +
                             std::to_string(dim * dim) + " numbers, got " +
                             std::to_string(entries.size()));
  }
  return QuboMatrix(static_cast<int>(dim), std::move(entries));
}

QuboMatrix load_qubo(const std::string& path) {
  return qubo_from_json(open_and_parse(path), "\"" + path + "\"");
}

void save_qubo(const QuboMatrix& q, const std::string& path) {
  write_json(qubo_to_json(q), path);
}

json report_to_json(const SweepReport& report) {
  json per_subrange = json::array();
  for (const SubrangeResult& entry : report.per_subrange) {
    json bits = json::array();
    for (std::uint8_t bit : entry.best_assignment.bits) bits.push_back(static_cast<int>(bit));
    per_subrange.push_back({{"T", entry.spec.translation()},
                            {"target_energy", entry.target_energy},
                            {"best_energy", entry.best_energy},
                            {"assignment", std::move(bits)},
                            {"x", entry.solution},
                            {"hit", entry.hit}});
  }
  return {{"schema_version", 1},
          {"total_subranges", report.total_subranges},
          {"relative_tolerance", report.relative_tolerance},
          {"hits", report.hits},
          {"approximate_index", report.approximate_index},
          {"per_subrange", std::move(per_subrange)}};
}

void save_report(const SweepReport& report, const std::string& path) {
  write_json(report_to_json(report), path);
}

}  // namespace subqubo
