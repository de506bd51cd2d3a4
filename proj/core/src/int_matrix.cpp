#include "orbicoh/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotDirectProduct: return "NotDirectProduct";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::NotInCatalog: return "NotInCatalog";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::OrderConditionFailed: return "OrderConditionFailed";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::UncertifiedAction: return "UncertifiedAction";
    case ErrorKind::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Integer& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(*this);
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) out(a.rows_ + r, a.cols_ + c) = b(r, c);
  return out;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack column counts differ");
  IntMatrix out(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.cols_ == 0) return right;
  if (right.cols_ == 0) return left;
  if (left.rows_ != right.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack row counts differ");
  IntMatrix out(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, left.cols_ + c) = right(r, c);
  }
  return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  return out;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m(*this);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::unimodular_inverse() const {
  if (!is_square()) throw Error(ErrorKind::NotUnimodular, "non-square matrix");
  const std::size_t n = rows_;
  Integer det = determinant();
  if (det != 1 && det != -1) throw Error(ErrorKind::NotUnimodular, "determinant " + det.get_str() + " is not +-1");
  // Gauss-Jordan over the rationals; the result is integral because det = +-1.
  std::vector<mpq_class> a(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return a[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = mpq_class((*this)(r, c));
    at(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (sgn(at(piv, col)) == 0) ++piv;
    if (piv != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
    mpq_class inv = 1 / at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(at(r, col)) == 0) continue;
      mpq_class f = at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = at(r, n + c).get_num();
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::operator<(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
  if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
  return std::lexicographical_compare(data_.begin(), data_.end(), rhs.data_.begin(), rhs.data_.end());
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace orbicoh
