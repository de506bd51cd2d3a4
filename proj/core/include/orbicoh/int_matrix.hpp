#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace orbicoh {

using Integer = mpz_class;

/// Dense integer matrix, row-major, arbitrary precision entries.
/// Zero-dimensional shapes (0×k, k×0) are legal everywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(const std::vector<Integer>& d, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Integer>& data() const noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  /// Block-diagonal sum.
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
  /// Rows of `top` followed by rows of `bottom`; column counts must agree.
  static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
  static IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);

  IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// Exact determinant (Bareiss fraction-free elimination); square only.
  Integer determinant() const;
  Integer trace() const;
  /// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
  IntMatrix unimodular_inverse() const;

  bool operator==(const IntMatrix& rhs) const;
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }
  /// Lexicographic order on (rows, cols, entries); used for element lookup tables.
  bool operator<(const IntMatrix& rhs) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace orbicoh
