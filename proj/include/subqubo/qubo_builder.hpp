#pragma once

#include <vector>

#include "subqubo/problem_model.hpp"

namespace subqubo {

/// Right-hand side after translating the problem into a subrange:
/// c = b - A*T, and the energy -c.c that the QUBO minimum attains when
/// the subrange contains an exact solution.
class EffectiveRhs {
 public:
  explicit EffectiveRhs(std::vector<double> c);

  int n() const { return static_cast<int>(c_.size()); }
  const std::vector<double>& c() const { return c_; }
  double target_energy() const { return target_energy_; }

 private:
  std::vector<double> c_;
  double target_energy_;
};

/// c = b - A*T for the given subrange.
EffectiveRhs effective_rhs(const LinearSystem& system, const SubrangeSpec& spec);

/// Assembles the upper-triangular QUBO matrix of ||A x - c||^2 - c.c over
/// the qubit expansion of x. Diagonal entry of qubit (i, l):
///   sum_k a_{k,i}^2 * 2^(2e) - sum_k 2^(e+1) * a_{k,i} * c_k,  e = lo + l.
/// Intra-variable coupling (i, l1 < l2): sum_k a_{k,i}^2 * 2^(e1+e2+1).
/// Inter-variable coupling (i < j):      sum_k a_{k,i} * a_{k,j} * 2^(e1+e2+1).
/// Accumulation runs k-outermost so results are reproducible run to run;
/// for integral inputs below 2^53 every entry is exact.
QuboMatrix build_qubo(const LinearSystem& system, const std::vector<double>& c,
                      const BinaryEncoding& encoding);

/// Rebuilds only the linear (diagonal) terms for a new constant vector:
/// each diagonal entry moves by sum_k 2^(e+1) * a_{k,i} * (c_old_k - c_new_k),
/// off-diagonal couplings are reused bit for bit. For integral inputs the
/// result equals build_qubo(system, c_new, encoding) entrywise.
QuboMatrix update_linear_for_subrange(const QuboMatrix& q, const LinearSystem& system,
                                      const std::vector<double>& c_old,
                                      const std::vector<double>& c_new,
                                      const BinaryEncoding& encoding);

}  // namespace subqubo
