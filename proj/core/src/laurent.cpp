#include "orbicoh/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (rhs.exps.size() != exps.size()) throw Error(ErrorKind::RankMismatch, "monomial ranks differ");
  Monomial out{exps};
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += rhs.exps[i];
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out{exps};
  for (auto& e : out.exps) e = -e;
  return out;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Integer& c) {
  return monomial(Monomial{std::vector<long>(rank, 0)}, c);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p(m.rank());
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t rank, std::vector<long> exps, const Integer& c) {
  if (exps.size() != rank) throw Error(ErrorKind::RankMismatch, "exponent vector length differs from ring rank");
  return monomial(Monomial{std::move(exps)}, c);
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t i) {
  std::vector<long> e(rank, 0);
  e.at(i) = 1;
  return monomial(Monomial{std::move(e)});
}

LaurentPoly LaurentPoly::one_minus_x(std::size_t rank, std::size_t i) {
  return constant(rank, 1) - variable(rank, i);
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank, std::vector<Term> terms) {
  std::map<Monomial, Integer> acc;
  for (auto& [m, c] : terms) {
    if (m.rank() != rank) throw Error(ErrorKind::RankMismatch, "term rank differs from ring rank");
    acc[m] += c;
  }
  LaurentPoly p(rank);
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool LaurentPoly::is_constant(const Integer& c) const {
  if (sgn(c) == 0) return terms_.empty();
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == c;
}

void LaurentPoly::check_rank(const LaurentPoly& rhs) const {
  if (rank_ != rhs.rank_)
    throw Error(ErrorKind::RankMismatch,
                "Laurent ranks " + std::to_string(rank_) + " and " + std::to_string(rhs.rank_) + " differ");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  check_rank(rhs);
  LaurentPoly out(rank_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin(), b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (sgn(c) != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  check_rank(rhs);
  if (terms_.empty() || rhs.terms_.empty()) return LaurentPoly(rank_);
  std::map<Monomial, Integer> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) acc[ma * mb] += ca * cb;
  LaurentPoly out(rank_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.terms_.emplace_back(m, std::move(c));
  return out;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (sgn(c) == 0) return LaurentPoly(rank_);
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
  LaurentPoly out(rank_);
  out.terms_.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) out.terms_.emplace_back(mm * m, c);
  // Translation preserves the lexicographic order of exponent vectors.
  return out;
}

Integer LaurentPoly::augment() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

LaurentPoly LaurentPoly::substitute_one(std::size_t i) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.exps.at(i) = 0;
    terms.emplace_back(std::move(mm), c);
  }
  return from_terms(rank_, std::move(terms));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    Integer mag = abs(c);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (any) mono << '*';
      mono << 'x' << (i + 1);
      if (m.exps[i] != 1) mono << '^' << m.exps[i];
      any = true;
    }
    if (!any) os << mag.get_str();
    else if (mag == 1) os << mono.str();
    else os << mag.get_str() << '*' << mono.str();
  }
  return os.str();
}

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
Integer augment(const LaurentPoly& f) { return f.augment(); }

RingAuto::RingAuto(IntMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw Error(ErrorKind::NotUnimodular, "ring automorphism matrix must be square");
  Integer det = a_.determinant();
  if (det != 1 && det != -1) throw Error(ErrorKind::NotUnimodular, "matrix " + a_.to_string() + " has det " + det.get_str());
  rows_.resize(a_.rows());
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    rows_[i].resize(a_.cols());
    for (std::size_t j = 0; j < a_.cols(); ++j) rows_[i][j] = a_(i, j).get_si();
  }
}

Monomial RingAuto::apply(const Monomial& m) const {
  if (m.rank() != rank()) throw Error(ErrorKind::RankMismatch, "automorphism rank differs from monomial rank");
  Monomial out{std::vector<long>(rank(), 0)};
  for (std::size_t i = 0; i < rank(); ++i) {
    if (m.exps[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) out.exps[j] += m.exps[i] * rows_[i][j];
  }
  return out;
}

LaurentPoly RingAuto::apply(const LaurentPoly& f) const {
  if (f.rank() != rank()) throw Error(ErrorKind::RankMismatch, "automorphism rank differs from polynomial rank");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(apply(m), c);
  return LaurentPoly::from_terms(rank(), std::move(terms));
}

RingAuto RingAuto::then(const RingAuto& other) const { return RingAuto(a_ * other.a_); }

LaurentPoly apply_auto(const RingAuto& sigma, const LaurentPoly& f) { return sigma.apply(f); }

LaurentPoly geometric_sum(std::size_t rank, std::size_t i, long a) {
  std::vector<LaurentPoly::Term> terms;
  std::vector<long> e(rank, 0);
  if (a >= 0) {
    for (long k = 0; k < a; ++k) {
      e.at(i) = k;
      terms.emplace_back(Monomial{e}, Integer(1));
    }
  } else {
    for (long k = 1; k <= -a; ++k) {
      e.at(i) = -k;
      terms.emplace_back(Monomial{e}, Integer(-1));
    }
  }
  return LaurentPoly::from_terms(rank, std::move(terms));
}

Division divide_by_1_minus_x(const LaurentPoly& f, std::size_t i) {
  if (i >= f.rank()) throw Error(ErrorKind::OutOfRange, "variable index out of range");
  if (!f.substitute_one(i).is_zero()) return {LaurentPoly(f.rank()), false};

  // Group terms by the monomial with x_i removed; each group is a one-variable
  // Laurent polynomial g(x_i) with g(1) = 0. With S_k = sum_{m >= k} c_m the
  // quotient is -sum_k S_k x_i^{k-1}.
  std::map<Monomial, std::map<long, Integer, std::greater<>>> groups;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest.exps[i] = 0;
    groups[rest][m.exps[i]] += c;
  }
  std::vector<LaurentPoly::Term> q;
  for (const auto& [rest, coeffs] : groups) {
    const long top = coeffs.begin()->first;
    const long bottom = coeffs.rbegin()->first;
    Integer running = 0;
    for (long k = top; k > bottom; --k) {
      auto it = coeffs.find(k);
      if (it != coeffs.end()) running += it->second;
      if (sgn(running) == 0) continue;
      Monomial m = rest;
      m.exps[i] = k - 1;
      q.emplace_back(std::move(m), -running);
    }
  }
  return {LaurentPoly::from_terms(f.rank(), std::move(q)), true};
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t ring_rank)
    : rows_(rows), cols_(cols), ring_rank_(ring_rank), data_(rows * cols, LaurentPoly(ring_rank)) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n, std::size_t ring_rank) {
  LaurentMatrix m(n, n, ring_rank);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(ring_rank, 1);
  return m;
}

LaurentMatrix LaurentMatrix::from_integers(const IntMatrix& src, std::size_t ring_rank) {
  LaurentMatrix m(src.rows(), src.cols(), ring_rank);
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) m(r, c) = LaurentPoly::constant(ring_rank, src(r, c));
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "Laurent matrix product shape");
  if (ring_rank_ != rhs.ring_rank_) throw Error(ErrorKind::RankMismatch, "Laurent matrix ring ranks differ");
  LaurentMatrix out(rows_, rhs.cols_, ring_rank_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::vector<LaurentPoly::Term> terms;
      for (std::size_t k = 0; k < cols_; ++k) {
        const LaurentPoly& a = (*this)(r, k);
        const LaurentPoly& b = rhs(k, c);
        if (a.is_zero() || b.is_zero()) continue;
        for (const auto& [ma, ca] : a.terms())
          for (const auto& [mb, cb] : b.terms()) terms.emplace_back(ma * mb, ca * cb);
      }
      if (!terms.empty()) out(r, c) = LaurentPoly::from_terms(ring_rank_, std::move(terms));
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "Laurent matrix difference shape");
  LaurentMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && ring_rank_ == rhs.ring_rank_ && data_ == rhs.data_;
}

bool LaurentMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

bool LaurentMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_constant(r == c ? 1 : 0)) return false;
  return true;
}

LaurentMatrix LaurentMatrix::twisted(const RingAuto& sigma) const {
  LaurentMatrix out(rows_, cols_, ring_rank_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!data_[i].is_zero()) out.data_[i] = sigma.apply(data_[i]);
  return out;
}

IntMatrix LaurentMatrix::augmented() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).augment();
  return m;
}

std::vector<std::vector<std::string>> LaurentMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).to_string();
  return out;
}

}  // namespace orbicoh
