#include "subqubo/problem_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subqubo {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

bool exact_integer(double v) {
  return std::isfinite(v) && std::nearbyint(v) == v && std::abs(v) <= kExactIntegerLimit;
}

}  // namespace

LinearSystem::LinearSystem(int n, std::vector<double> a, std::vector<double> b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
  if (n_ < 1) {
    throw std::invalid_argument("LinearSystem: n must be positive, got " + std::to_string(n_));
  }
  const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  if (a_.size() != nn) {
    throw std::invalid_argument("LinearSystem: A must be " + std::to_string(n_) + "x" +
                                std::to_string(n_) + ", got " + std::to_string(a_.size()) +
                                " entries");
  }
  if (b_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("LinearSystem: b must have length " + std::to_string(n_) +
                                ", got " + std::to_string(b_.size()));
  }
  for (double v : a_) {
    if (!std::isfinite(v)) throw std::invalid_argument("LinearSystem: A has a non-finite entry");
  }
  for (double v : b_) {
    if (!std::isfinite(v)) throw std::invalid_argument("LinearSystem: b has a non-finite entry");
  }
}

std::vector<double> LinearSystem::apply(const std::vector<double>& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("LinearSystem::apply: x has length " + std::to_string(x.size()) +
                                ", expected " + std::to_string(n_));
  }
  std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
  for (int row = 0; row < n_; ++row) {
    double acc = 0.0;
    for (int col = 0; col < n_; ++col) {
      acc += a(row, col) * x[static_cast<std::size_t>(col)];
    }
    out[static_cast<std::size_t>(row)] = acc;
  }
  return out;
}

bool LinearSystem::is_integral() const {
  for (double v : a_) {
    if (!exact_integer(v)) return false;
  }
  for (double v : b_) {
    if (!exact_integer(v)) return false;
  }
  return true;
}

BinaryEncoding::BinaryEncoding(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) {
    throw std::invalid_argument("BinaryEncoding: lo (" + std::to_string(lo_) +
                                ") must not exceed hi (" + std::to_string(hi_) + ")");
  }
}

double BinaryEncoding::weight(int bit_offset) const {
  if (bit_offset < 0 || bit_offset >= bits_per_var()) {
    throw std::out_of_range("BinaryEncoding::weight: bit offset " + std::to_string(bit_offset) +
                            " outside [0, " + std::to_string(bits_per_var()) + ")");
  }
  return std::ldexp(1.0, lo_ + bit_offset);
}

std::int64_t BinaryEncoding::subrange_width() const {
  if (lo_ != 0) {
    throw std::domain_error("BinaryEncoding: subrange width requires integer mode (lo = 0), lo = " +
                            std::to_string(lo_));
  }
  if (hi_ >= 62) {
    throw std::length_error("BinaryEncoding: subrange width 2^" + std::to_string(hi_ + 1) +
                            " overflows 64-bit arithmetic");
  }
  return std::int64_t{1} << (hi_ + 1);
}

SubrangeSpec::SubrangeSpec(std::vector<std::int64_t> translation, std::int64_t bound,
                           const BinaryEncoding& encoding)
    : translation_(std::move(translation)), bound_(bound), width_(encoding.subrange_width()) {
  if (translation_.empty()) {
    throw std::invalid_argument("SubrangeSpec: translation vector must not be empty");
  }
  if (bound_ < 1) {
    throw std::invalid_argument("SubrangeSpec: bound s must be positive, got " +
                                std::to_string(bound_));
  }
  for (std::size_t i = 0; i < translation_.size(); ++i) {
    const std::int64_t t = translation_[i];
    if (t % width_ != 0) {
      throw std::invalid_argument("SubrangeSpec: T[" + std::to_string(i) + "] = " +
                                  std::to_string(t) + " is not a multiple of the width " +
                                  std::to_string(width_));
    }
    const std::int64_t c = t / width_;
    if (c < -bound_ || c > bound_ - 1) {
      throw std::invalid_argument("SubrangeSpec: coefficient " + std::to_string(c) +
                                  " of T[" + std::to_string(i) + "] outside [-s, s-1] for s = " +
                                  std::to_string(bound_));
    }
  }
}

SubrangeSpec SubrangeSpec::zero(int n, const BinaryEncoding& encoding) {
  if (n < 1) {
    throw std::invalid_argument("SubrangeSpec::zero: n must be positive, got " + std::to_string(n));
  }
  return SubrangeSpec(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), 1, encoding);
}

SubrangeSpec SubrangeSpec::from_coefficients(const std::vector<std::int64_t>& coefficients,
                                             std::int64_t bound, const BinaryEncoding& encoding) {
  const std::int64_t width = encoding.subrange_width();
  std::vector<std::int64_t> translation(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    translation[i] = coefficients[i] * width;
  }
  return SubrangeSpec(std::move(translation), bound, encoding);
}

std::int64_t SubrangeSpec::coefficient(int var_index) const {
  if (var_index < 0 || var_index >= n()) {
    throw std::out_of_range("SubrangeSpec: variable index " + std::to_string(var_index) +
                            " outside [0, " + std::to_string(n()) + ")");
  }
  return translation_[static_cast<std::size_t>(var_index)] / width_;
}

QuboMatrix::QuboMatrix(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) {
    throw std::invalid_argument("QuboMatrix: dim must be positive, got " + std::to_string(dim_));
  }
  if (entries_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_)) {
    throw std::invalid_argument("QuboMatrix: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  for (int row = 1; row < dim_; ++row) {
    for (int col = 0; col < row; ++col) {
      if ((*this)(row, col) != 0.0) {
        throw std::invalid_argument("QuboMatrix: entry (" + std::to_string(row) + "," +
                                    std::to_string(col) + ") below the diagonal must be zero");
      }
    }
  }
}

int qubit_index(int var_index, int bit_offset, const BinaryEncoding& encoding) {
  if (var_index < 0) {
    throw std::out_of_range("qubit_index: variable index must be nonnegative, got " +
                            std::to_string(var_index));
  }
  if (bit_offset < 0 || bit_offset >= encoding.bits_per_var()) {
    throw std::out_of_range("qubit_index: bit offset " + std::to_string(bit_offset) +
                            " outside [0, " + std::to_string(encoding.bits_per_var()) + ")");
  }
  return encoding.bits_per_var() * var_index + bit_offset;
}

std::vector<double> decode_residues(const Assignment& assignment, const BinaryEncoding& encoding,
                                    int n) {
  if (n < 1) {
    throw std::invalid_argument("decode_residues: n must be positive, got " + std::to_string(n));
  }
  const int bits = encoding.bits_per_var();
  if (assignment.bits.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(bits)) {
    throw std::invalid_argument("decode_residues: assignment has " +
                                std::to_string(assignment.bits.size()) + " bits, expected " +
                                std::to_string(n * bits));
  }
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int l = 0; l < bits; ++l) {
      if (assignment.bits[static_cast<std::size_t>(qubit_index(i, l, encoding))] != 0) {
        acc += std::ldexp(1.0, encoding.lo() + l);
      }
    }
    x[static_cast<std::size_t>(i)] = acc;
  }
  return x;
}

std::vector<double> decode(const Assignment& assignment, const BinaryEncoding& encoding,
                           const SubrangeSpec& spec) {
  std::vector<double> x = decode_residues(assignment, encoding, spec.n());
  for (int i = 0; i < spec.n(); ++i) {
    x[static_cast<std::size_t>(i)] +=
        static_cast<double>(spec.translation()[static_cast<std::size_t>(i)]);
  }
  return x;
}

SubrangeLocation subrange_of(double value, const BinaryEncoding& encoding) {
  const std::int64_t width = encoding.subrange_width();
  if (!exact_integer(value)) {
    throw std::domain_error("subrange_of: value " + std::to_string(value) +
                            " is not an exactly representable integer");
  }
  const auto v = static_cast<std::int64_t>(value);
  std::int64_t coefficient = v / width;
  std::int64_t residue = v % width;
  if (residue < 0) {
    residue += width;
    coefficient -= 1;
  }
  return SubrangeLocation{coefficient, residue};
}

}  // namespace subqubo
