#include "subqubo/qubo_builder.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subqubo {

namespace {

void check_rhs_length(const LinearSystem& system, const std::vector<double>& c,
                      const char* where) {
  if (c.size() != static_cast<std::size_t>(system.n())) {
    throw std::invalid_argument(std::string(where) + ": c has length " +
                                std::to_string(c.size()) + ", expected " +
                                std::to_string(system.n()));
  }
}

}  // namespace

EffectiveRhs::EffectiveRhs(std::vector<double> c) : c_(std::move(c)) {
  if (c_.empty()) {
    throw std::invalid_argument("EffectiveRhs: c must not be empty");
  }
  double acc = 0.0;
  for (double v : c_) acc += v * v;
  target_energy_ = -acc;
}

EffectiveRhs effective_rhs(const LinearSystem& system, const SubrangeSpec& spec) {
  if (spec.n() != system.n()) {
    throw std::invalid_argument("effective_rhs: T has length " + std::to_string(spec.n()) +
                                ", expected " + std::to_string(system.n()));
  }
  std::vector<double> t(spec.translation().begin(), spec.translation().end());
  std::vector<double> at = system.apply(t);
  std::vector<double> c(static_cast<std::size_t>(system.n()));
  for (int k = 0; k < system.n(); ++k) {
    c[static_cast<std::size_t>(k)] = system.b()[static_cast<std::size_t>(k)] -
                                     at[static_cast<std::size_t>(k)];
  }
  return EffectiveRhs(std::move(c));
}

QuboMatrix build_qubo(const LinearSystem& system, const std::vector<double>& c,
                      const BinaryEncoding& encoding) {
  check_rhs_length(system, c, "build_qubo");
  const int n = system.n();
  const int bits = encoding.bits_per_var();
  const int lo = encoding.lo();
  const int dim = n * bits;
  std::vector<double> entries(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
  auto at = [&](int row, int col) -> double& {
    return entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim) +
                   static_cast<std::size_t>(col)];
  };

  // Linear terms.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double aki = system.a(k, i);
      for (int l = 0; l < bits; ++l) {
        const int e = lo + l;
        const double cef1 = std::ldexp(aki * aki, 2 * e);
        const double cef2 = std::ldexp(aki * c[static_cast<std::size_t>(k)], e + 1);
        const int po = qubit_index(i, l, encoding);
        at(po, po) += cef1 - cef2;
      }
    }
  }

  // Quadratic terms between bits of the same variable.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double aki = system.a(k, i);
      for (int l1 = 0; l1 + 1 < bits; ++l1) {
        for (int l2 = l1 + 1; l2 < bits; ++l2) {
          const double qcef = std::ldexp(aki * aki, (lo + l1) + (lo + l2) + 1);
          at(qubit_index(i, l1, encoding), qubit_index(i, l2, encoding)) += qcef;
        }
      }
    }
  }

  // Quadratic terms between bits of different variables.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double aa = system.a(k, i) * system.a(k, j);
        for (int l1 = 0; l1 < bits; ++l1) {
          for (int l2 = 0; l2 < bits; ++l2) {
            const double qcef = std::ldexp(aa, (lo + l1) + (lo + l2) + 1);
            at(qubit_index(i, l1, encoding), qubit_index(j, l2, encoding)) += qcef;
          }
        }
      }
    }
  }

  return QuboMatrix(dim, std::move(entries));
}

QuboMatrix update_linear_for_subrange(const QuboMatrix& q, const LinearSystem& system,
                                      const std::vector<double>& c_old,
                                      const std::vector<double>& c_new,
                                      const BinaryEncoding& encoding) {
  check_rhs_length(system, c_old, "update_linear_for_subrange");
  check_rhs_length(system, c_new, "update_linear_for_subrange");
  const int n = system.n();
  const int bits = encoding.bits_per_var();
  const int dim = n * bits;
  if (q.dim() != dim) {
    throw std::invalid_argument("update_linear_for_subrange: matrix dim " +
                                std::to_string(q.dim()) + " does not match n * bits_per_var = " +
                                std::to_string(dim));
  }
  std::vector<double> entries = q.entries();
  for (int k = 0; k < n; ++k) {
    const double dk = c_old[static_cast<std::size_t>(k)] - c_new[static_cast<std::size_t>(k)];
    if (dk == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double aki = system.a(k, i);
      for (int l = 0; l < bits; ++l) {
        const int po = qubit_index(i, l, encoding);
        entries[static_cast<std::size_t>(po) * static_cast<std::size_t>(dim) +
                static_cast<std::size_t>(po)] += std::ldexp(aki * dk, encoding.lo() + l + 1);
      }
    }
  }
  return QuboMatrix(dim, std::move(entries));
}

}  // namespace subqubo
