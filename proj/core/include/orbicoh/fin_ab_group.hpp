#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbicoh/int_matrix.hpp"

namespace orbicoh {

/// A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant-factor
/// form: every d_i >= 2 and d_i | d_{i+1}. Equality is structural.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Accepts any list of cyclic orders (entries 0 count as free Z, entries 1
  /// are dropped) and normalizes to invariant factors.
  FinAbGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);

  static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, {}); }
  static FinAbGroup cyclic(const Integer& order);
  /// Z^free + sum over (order, multiplicity).
  static FinAbGroup from_powers(std::size_t free_rank, const std::vector<std::pair<long, std::size_t>>& powers);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Order of a finite group; throws OutOfRange when the free rank is positive.
  Integer order() const;
  FinAbGroup torsion_part() const { return FinAbGroup(0, torsion_); }

  /// Number of cyclic factors whose order is divisible by p.
  std::size_t p_rank(long p) const;
  /// prime -> exponents of the prime-power cyclic factors, descending.
  std::map<Integer, std::vector<unsigned>> primary_view() const;

  FinAbGroup operator+(const FinAbGroup& rhs) const;
  FinAbGroup& operator+=(const FinAbGroup& rhs);
  /// k-fold direct sum.
  FinAbGroup power(std::size_t k) const;

  bool operator==(const FinAbGroup& rhs) const {
    return free_rank_ == rhs.free_rank_ && torsion_ == rhs.torsion_;
  }
  bool operator!=(const FinAbGroup& rhs) const { return !(*this == rhs); }

  /// Primary notation, e.g. "Z^5 + Z/4 + (Z/2)^4"; the trivial group prints "0".
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Prime factorization by trial division (inputs here are small invariant factors).
std::map<Integer, unsigned> factorize(const Integer& n);
bool is_prime(long p);

}  // namespace orbicoh
