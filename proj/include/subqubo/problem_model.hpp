#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

/// Core domain types for formulating integer linear systems as QUBO
/// instances over a radix-2 qubit encoding, plus the encode/decode
/// operations between real-valued solution vectors and qubit assignments.
namespace subqubo {

/// Square linear system `A x = b`, dense row-major storage.
class LinearSystem {
 public:
  LinearSystem(int n, std::vector<double> a, std::vector<double> b);

  int n() const { return n_; }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }

  double a(int row, int col) const {
    return a_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(col)];
  }

  /// Matrix-vector product A*x. Throws on length mismatch.
  std::vector<double> apply(const std::vector<double>& x) const;

  /// True when every entry of A and b is an integer that a double holds
  /// exactly (|value| <= 2^53). Exact-equality tolerances apply then.
  bool is_integral() const;

 private:
  int n_;
  std::vector<double> a_;
  std::vector<double> b_;
};

/// Bit layout shared by every variable: one qubit per exponent in
/// [lo, hi], the qubit at offset l carrying weight 2^(lo+l). Negative
/// lo gives fractional weights; subrange translation requires lo == 0.
class BinaryEncoding {
 public:
  BinaryEncoding(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int bits_per_var() const { return hi_ - lo_ + 1; }
  bool integer_mode() const { return lo_ == 0; }

  /// Weight 2^(lo + bit_offset) of one qubit.
  double weight(int bit_offset) const;

  /// Subrange width 2^(hi+1): the count of values bits_per_var qubits
  /// can represent in integer mode. Throws unless lo == 0.
  std::int64_t subrange_width() const;

 private:
  int lo_;
  int hi_;
};

/// One translated window of the total solution range: variable i lives in
/// [T_i, T_i + width - 1] where T_i is an exact multiple of the width and
/// the multiplier (the translation coefficient) lies in [-s, s-1].
class SubrangeSpec {
 public:
  SubrangeSpec(std::vector<std::int64_t> translation, std::int64_t bound,
               const BinaryEncoding& encoding);

  /// The untranslated subrange T = 0 with bound s = 1.
  static SubrangeSpec zero(int n, const BinaryEncoding& encoding);

  static SubrangeSpec from_coefficients(const std::vector<std::int64_t>& coefficients,
                                        std::int64_t bound,
                                        const BinaryEncoding& encoding);

  int n() const { return static_cast<int>(translation_.size()); }
  std::int64_t bound() const { return bound_; }
  std::int64_t width() const { return width_; }
  const std::vector<std::int64_t>& translation() const { return translation_; }
  std::int64_t coefficient(int var_index) const;

  bool operator==(const SubrangeSpec&) const = default;

 private:
  std::vector<std::int64_t> translation_;
  std::int64_t bound_;
  std::int64_t width_;
};

/// Upper-triangular QUBO coefficient matrix; entries below the diagonal
/// are structurally zero.
class QuboMatrix {
 public:
  QuboMatrix(int dim, std::vector<double> entries);

  int dim() const { return dim_; }

  double operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(col)];
  }

  /// Dense row-major entries, dim*dim.
  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const QuboMatrix&) const = default;

 private:
  int dim_;
  std::vector<double> entries_;
};

/// One binary assignment of every qubit.
struct Assignment {
  std::vector<std::uint8_t> bits;

  bool operator==(const Assignment&) const = default;
};

struct SampleRecord {
  Assignment assignment;
  double energy = 0.0;
  std::uint64_t occurrences = 0;
};

/// Aggregated sampler output: one record per distinct assignment seen,
/// sorted ascending by energy.
struct SampleSet {
  std::vector<SampleRecord> records;
  std::uint64_t total_reads = 0;
};

/// Which subrange an integer value falls in and where inside it:
/// value = coefficient * width + residue, 0 <= residue < width.
struct SubrangeLocation {
  std::int64_t coefficient = 0;
  std::int64_t residue = 0;

  bool operator==(const SubrangeLocation&) const = default;
};

/// Flat index of qubit (var_index, bit_offset): bits_per_var * var + offset.
int qubit_index(int var_index, int bit_offset, const BinaryEncoding& encoding);

/// Radix value of each variable's bits, no translation:
/// x_i = sum_l 2^(lo+l) * bits[qubit_index(i, l)].
std::vector<double> decode_residues(const Assignment& assignment,
                                    const BinaryEncoding& encoding, int n);

/// Full decode including the subrange translation: residues + T.
std::vector<double> decode(const Assignment& assignment,
                           const BinaryEncoding& encoding,
                           const SubrangeSpec& spec);

/// Floor-division split of an integer value into (coefficient, residue);
/// the residue is nonnegative for negative values too. Integer mode only.
SubrangeLocation subrange_of(double value, const BinaryEncoding& encoding);

}  // namespace subqubo
