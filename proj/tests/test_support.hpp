#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "subqubo/problem_model.hpp"

// Shared fixtures and independent oracles. The oracles restate the math
// from first principles (plain loops, no library calls under test) so the
// production code is checked against a second derivation, not itself.
namespace subqubo::test {

/// True when fn() throws an E whose message mentions needle.
template <typename E, typename Fn>
bool throws_containing(Fn&& fn, const std::string& needle) {
  try {
    fn();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

/// Bit k of mask becomes qubit k.
inline Assignment assignment_from_mask(std::uint64_t mask, int dim) {
  Assignment a;
  a.bits.resize(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    a.bits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((mask >> k) & 1u);
  }
  return a;
}

/// ||A x - c||^2 - c.c evaluated directly from the assignment: variable i
/// is decoded as sum_l 2^(lo+l) * bits[bits_per_var * i + l], translation
/// excluded. This is the quantity every QUBO energy must reproduce.
inline double least_squares_energy(const LinearSystem& system, const std::vector<double>& c,
                                   const BinaryEncoding& encoding, const Assignment& a) {
  const int n = system.n();
  const int bits = encoding.bits_per_var();
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < bits; ++l) {
      if (a.bits[static_cast<std::size_t>(bits * i + l)] != 0) {
        x[static_cast<std::size_t>(i)] += std::ldexp(1.0, encoding.lo() + l);
      }
    }
  }
  double residual = 0.0;
  double c_dot_c = 0.0;
  for (int k = 0; k < n; ++k) {
    double row = 0.0;
    for (int i = 0; i < n; ++i) row += system.a(k, i) * x[static_cast<std::size_t>(i)];
    const double r = row - c[static_cast<std::size_t>(k)];
    residual += r * r;
    c_dot_c += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
  }
  return residual - c_dot_c;
}

/// Exact integer determinant by minor expansion; fine for the n <= 4 the
/// random fixtures use.
inline std::int64_t int_determinant(const std::vector<std::int64_t>& m, int n) {
  if (n == 1) return m[0];
  std::int64_t det = 0;
  std::int64_t sign = 1;
  for (int col = 0; col < n; ++col) {
    std::vector<std::int64_t> minor;
    minor.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int r = 1; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor.push_back(m[static_cast<std::size_t>(r * n + c)]);
      }
    }
    det += sign * m[static_cast<std::size_t>(col)] * int_determinant(minor, n - 1);
    sign = -sign;
  }
  return det;
}

/// The worked 2x2 example used throughout: A = [[3,1],[-1,2]], b = (46,-55),
/// solution x = (21,-17), 4 qubits per variable.
inline LinearSystem example_system() {
  return LinearSystem(2, {3.0, 1.0, -1.0, 2.0}, {46.0, -55.0});
}

inline BinaryEncoding example_encoding() { return BinaryEncoding(0, 3); }

}  // namespace subqubo::test
