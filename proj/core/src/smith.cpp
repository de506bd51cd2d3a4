#include "orbicoh/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "orbicoh/error.hpp"

namespace orbicoh {

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& v) { return sgn(v) != 0; }));
}

namespace {

// In-place Smith reduction of `w`. When `u`/`v` are given they accumulate the
// row and column operations so that u * A * v = w at all times.
class SmithReducer {
 public:
  SmithReducer(IntMatrix& w, IntMatrix* u, IntMatrix* v) : w_(w), u_(u), v_(v) {}

  void run() {
    const std::size_t steps = std::min(w_.rows(), w_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
      if (sgn(w_(t, t)) < 0) negate_row(t);
    }
  }

 private:
  // Returns false when the remaining submatrix is zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      auto pivot = find_min_pivot(t);
      if (!pivot) return false;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < w_.rows(); ++i) {
        if (sgn(w_(i, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w_(i, t).get_mpz_t(), w_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (sgn(w_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w_.cols(); ++j) {
        if (sgn(w_(t, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w_(t, j).get_mpz_t(), w_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (sgn(w_(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility of the remainder.
      bool divisible = true;
      for (std::size_t i = t + 1; i < w_.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < w_.cols(); ++j) {
          if (sgn(w_(i, j)) != 0 && !mpz_divisible_p(w_(i, j).get_mpz_t(), w_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return true;
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const Integer* best_val = nullptr;
    for (std::size_t i = t; i < w_.rows(); ++i) {
      for (std::size_t j = t; j < w_.cols(); ++j) {
        const Integer& x = w_(i, j);
        if (sgn(x) == 0) continue;
        if (!best_val || mpz_cmpabs(x.get_mpz_t(), best_val->get_mpz_t()) < 0) {
          best = {i, j};
          best_val = &x;
          if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return best;
        }
      }
    }
    return best;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < w_.cols(); ++c) mpz_swap(w_(a, c).get_mpz_t(), w_(b, c).get_mpz_t());
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) mpz_swap((*u_)(a, c).get_mpz_t(), (*u_)(b, c).get_mpz_t());
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < w_.rows(); ++r) mpz_swap(w_(r, a).get_mpz_t(), w_(r, b).get_mpz_t());
    if (v_)
      for (std::size_t r = 0; r < v_->rows(); ++r) mpz_swap((*v_)(r, a).get_mpz_t(), (*v_)(r, b).get_mpz_t());
  }

  // row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < w_.cols(); ++c)
      if (sgn(w_(src, c)) != 0) mpz_addmul(w_(dst, c).get_mpz_t(), f.get_mpz_t(), w_(src, c).get_mpz_t());
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c)
        if (sgn((*u_)(src, c)) != 0) mpz_addmul((*u_)(dst, c).get_mpz_t(), f.get_mpz_t(), (*u_)(src, c).get_mpz_t());
  }

  // col[dst] += f * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < w_.rows(); ++r)
      if (sgn(w_(r, src)) != 0) mpz_addmul(w_(r, dst).get_mpz_t(), f.get_mpz_t(), w_(r, src).get_mpz_t());
    if (v_)
      for (std::size_t r = 0; r < v_->rows(); ++r)
        if (sgn((*v_)(r, src)) != 0) mpz_addmul((*v_)(r, dst).get_mpz_t(), f.get_mpz_t(), (*v_)(r, src).get_mpz_t());
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < w_.cols(); ++c) mpz_neg(w_(r, c).get_mpz_t(), w_(r, c).get_mpz_t());
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) mpz_neg((*u_)(r, c).get_mpz_t(), (*u_)(r, c).get_mpz_t());
  }

  IntMatrix& w_;
  IntMatrix* u_;
  IntMatrix* v_;
};

std::vector<Integer> diagonal_of(const IntMatrix& w) {
  std::vector<Integer> d(std::min(w.rows(), w.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = w(i, i);
  return d;
}

}  // namespace

SmithForm smith_form(const IntMatrix& a) {
  IntMatrix w(a);
  SmithForm out{{}, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  SmithReducer(w, &out.U, &out.V).run();
  out.d = diagonal_of(w);
  return out;
}

std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  IntMatrix w(a);
  SmithReducer(w, nullptr, nullptr).run();
  return diagonal_of(w);
}

std::size_t integer_rank(const IntMatrix& a) {
  auto d = smith_diagonal(a);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& v) { return sgn(v) != 0; }));
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_form(a);
  const std::size_t r = s.rank();
  IntMatrix basis(a.cols(), a.cols() - r);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = r; k < a.cols(); ++k) basis(i, k - r) = s.V(i, k);
  return basis;
}

FinAbGroup cokernel_group(const IntMatrix& a) {
  auto d = smith_diagonal(a);
  std::vector<Integer> torsion;
  std::size_t rank = 0;
  for (const auto& v : d) {
    if (sgn(v) == 0) continue;
    ++rank;
    if (v > 1) torsion.push_back(v);
  }
  return FinAbGroup(a.rows() - rank, torsion);
}

namespace {

FinAbGroup cohomology_from_diagonals(std::size_t dim, const std::vector<Integer>& d_in_diag, std::size_t rank_out) {
  std::vector<Integer> torsion;
  std::size_t rank_in = 0;
  for (const auto& v : d_in_diag) {
    if (sgn(v) == 0) continue;
    ++rank_in;
    if (v > 1) torsion.push_back(v);
  }
  return FinAbGroup(dim - rank_in - rank_out, torsion);
}

void check_pair(const IntMatrix& d_in, const IntMatrix& d_out, bool check_composition) {
  if (d_out.cols() != d_in.rows())
    throw Error(ErrorKind::DimensionMismatch, "d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                                                  std::to_string(d_in.rows()) + " rows");
  if (check_composition && !(d_out * d_in).is_zero())
    throw Error(ErrorKind::CompositionNonzero, "d_out * d_in != 0");
}

}  // namespace

FinAbGroup complex_cohomology(const IntMatrix& d_in, const IntMatrix& d_out) {
  check_pair(d_in, d_out, true);
  return cohomology_from_diagonals(d_in.rows(), smith_diagonal(d_in), integer_rank(d_out));
}

std::vector<FinAbGroup> cochain_cohomology(const std::vector<IntMatrix>& coboundaries, bool check_composition) {
  std::vector<FinAbGroup> out;
  if (coboundaries.empty()) return out;
  std::vector<std::vector<Integer>> diags;
  diags.reserve(coboundaries.size());
  for (const auto& d : coboundaries) diags.push_back(smith_diagonal(d));
  auto rank_of = [](const std::vector<Integer>& d) {
    return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& v) { return sgn(v) != 0; }));
  };
  for (std::size_t k = 0; k < coboundaries.size(); ++k) {
    const std::size_t dim = coboundaries[k].cols();
    if (k == 0) {
      out.push_back(FinAbGroup(dim - rank_of(diags[0]), {}));
      continue;
    }
    check_pair(coboundaries[k - 1], coboundaries[k], check_composition);
    out.push_back(cohomology_from_diagonals(dim, diags[k - 1], rank_of(diags[k])));
  }
  return out;
}

std::size_t rank_mod_p(const IntMatrix& a, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::int64_t> m(rows * cols);
  Integer tmp;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    mpz_fdiv_r_ui(tmp.get_mpz_t(), a.data()[i].get_mpz_t(), static_cast<unsigned long>(p));
    m[i] = tmp.get_si();
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return m[r * cols + c]; };
  auto inverse = [p](std::int64_t x) {
    // Fermat: x^(p-2) mod p
    std::int64_t result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
      base = static_cast<std::int64_t>((__int128)base * base % p);
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(at(piv, k), at(rank, k));
    const std::int64_t inv = inverse(at(rank, c));
    for (std::size_t k = c; k < cols; ++k) at(rank, k) = static_cast<std::int64_t>((__int128)at(rank, k) * inv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t f = at(r, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        std::int64_t v = static_cast<std::int64_t>((at(r, k) - (__int128)f * at(rank, k)) % p);
        at(r, k) = v < 0 ? v + p : v;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbicoh
