#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace typespace {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free elimination). Throws on non-square input.
BigInt determinant(const IntMatrix& a);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., all
/// nonnegative.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> diagonal;  // min(rows, cols) entries
  std::size_t rank = 0;
};

SNFResult smith_normal_form(const IntMatrix& A);

}  // namespace typespace
