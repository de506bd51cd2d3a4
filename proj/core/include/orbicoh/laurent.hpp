#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbicoh/int_matrix.hpp"

namespace orbicoh {

// Row-vector convention, used everywhere in the library: a lattice automorphism
// given by the matrix A sends the basis element x_i to the monomial whose
// exponent vector is row i of A, so x^v maps to x^(v A). The column convention
// never appears.
inline constexpr bool kRowVectorConvention = true;

/// x_1^{e_1} ... x_n^{e_n}, an element of Z^n written multiplicatively.
struct Monomial {
  std::vector<long> exps;

  std::size_t rank() const noexcept { return exps.size(); }
  Monomial operator*(const Monomial& rhs) const;
  Monomial inverse() const;
  bool is_one() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Integer Laurent polynomial in `rank` variables: the group ring Z[Z^n].
/// Terms are kept sorted by exponent vector with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const Integer& c);
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
  static LaurentPoly monomial(std::size_t rank, std::vector<long> exps, const Integer& c = 1);
  /// x_i (0-based index).
  static LaurentPoly variable(std::size_t rank, std::size_t i);
  /// 1 - x_i
  static LaurentPoly one_minus_x(std::size_t rank, std::size_t i);
  /// Builds from (monomial, coefficient) pairs in any order, merging duplicates.
  static LaurentPoly from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant(const Integer& c) const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
  LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly times_monomial(const Monomial& m) const;

  /// Sum of coefficients (evaluation at x_1 = ... = x_n = 1).
  Integer augment() const;
  /// Substitute x_i = 1.
  LaurentPoly substitute_one(std::size_t i) const;

  bool operator==(const LaurentPoly& rhs) const { return rank_ == rhs.rank_ && terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  /// Diagnostic text: "c*x1^e1*x2^e2" terms in sorted order, "0" when empty.
  std::string to_string() const;

 private:
  void check_rank(const LaurentPoly& rhs) const;

  std::size_t rank_ = 0;
  std::vector<Term> terms_;
};

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g);
Integer augment(const LaurentPoly& f);

/// Ring automorphism of Z[Z^n] induced by a unimodular matrix (row convention).
class RingAuto {
 public:
  explicit RingAuto(IntMatrix a);

  static RingAuto identity(std::size_t n) { return RingAuto(IntMatrix::identity(n)); }

  const IntMatrix& matrix() const noexcept { return a_; }
  std::size_t rank() const noexcept { return a_.rows(); }

  Monomial apply(const Monomial& m) const;
  LaurentPoly apply(const LaurentPoly& f) const;
  /// (this then other): f -> other(this(f)). Its matrix is A_this * A_other.
  RingAuto then(const RingAuto& other) const;

 private:
  IntMatrix a_;
  std::vector<std::vector<long>> rows_;
};

LaurentPoly apply_auto(const RingAuto& sigma, const LaurentPoly& f);

/// s with s * (1 - x_i) = 1 - x_i^a: sum_{k<a} x_i^k for a >= 0,
/// -sum_{k=1}^{-a} x_i^{-k} for a < 0.
LaurentPoly geometric_sum(std::size_t rank, std::size_t i, long a);

struct Division {
  LaurentPoly quotient;
  bool exact = false;
};

/// Divides by (1 - x_i). Exactness is decided first by substituting x_i = 1; the
/// quotient is then peeled off in decreasing x_i-exponent order.
Division divide_by_1_minus_x(const LaurentPoly& f, std::size_t i);

/// Matrix over Z[Z^n]; all entries share the ambient rank.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t ring_rank);

  static LaurentMatrix identity(std::size_t n, std::size_t ring_rank);
  static LaurentMatrix from_integers(const IntMatrix& m, std::size_t ring_rank);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t ring_rank() const noexcept { return ring_rank_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LaurentMatrix operator*(const LaurentMatrix& rhs) const;
  LaurentMatrix operator-(const LaurentMatrix& rhs) const;
  bool operator==(const LaurentMatrix& rhs) const;
  bool operator!=(const LaurentMatrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  bool is_identity() const;
  LaurentMatrix twisted(const RingAuto& sigma) const;
  IntMatrix augmented() const;

  /// Nested rows of textual entries, for reports.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t ring_rank_ = 0;
  std::vector<LaurentPoly> data_;
};

}  // namespace orbicoh
