#include "orbicoh/fin_ab_group.hpp"

#include <algorithm>
#include <sstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

std::map<Integer, unsigned> factorize(const Integer& n_in) {
  std::map<Integer, unsigned> out;
  Integer n = abs(n_in);
  if (n < 2) return out;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Rebuild the invariant-factor chain from prime-power components.
std::vector<Integer> invariant_factors_from_primary(const std::map<Integer, std::vector<unsigned>>& primary) {
  std::size_t count = 0;
  for (const auto& [p, exps] : primary) count = std::max(count, exps.size());
  std::vector<Integer> factors(count, Integer(1));
  for (const auto& [p, exps] : primary) {
    // exps sorted descending; the largest power goes into the last factor.
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      factors[count - 1 - i] *= pe;
    }
  }
  return factors;
}

}  // namespace

FinAbGroup::FinAbGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders) : free_rank_(free_rank) {
  std::map<Integer, std::vector<unsigned>> primary;
  for (const Integer& d : cyclic_orders) {
    if (sgn(d) == 0) {
      ++free_rank_;
      continue;
    }
    for (const auto& [p, e] : factorize(d)) primary[p].push_back(e);
  }
  for (auto& [p, exps] : primary) std::sort(exps.begin(), exps.end(), std::greater<>());
  torsion_ = invariant_factors_from_primary(primary);
}

FinAbGroup FinAbGroup::cyclic(const Integer& order) { return FinAbGroup(0, {order}); }

FinAbGroup FinAbGroup::from_powers(std::size_t free_rank, const std::vector<std::pair<long, std::size_t>>& powers) {
  std::vector<Integer> orders;
  for (const auto& [d, k] : powers)
    for (std::size_t i = 0; i < k; ++i) orders.emplace_back(d);
  return FinAbGroup(free_rank, orders);
}

Integer FinAbGroup::order() const {
  if (free_rank_ != 0) throw Error(ErrorKind::OutOfRange, "order of an infinite group");
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

std::size_t FinAbGroup::p_rank(long p) const {
  return static_cast<std::size_t>(
      std::count_if(torsion_.begin(), torsion_.end(), [p](const Integer& d) { return d % p == 0; }));
}

std::map<Integer, std::vector<unsigned>> FinAbGroup::primary_view() const {
  std::map<Integer, std::vector<unsigned>> primary;
  for (const Integer& d : torsion_)
    for (const auto& [p, e] : factorize(d)) primary[p].push_back(e);
  for (auto& [p, exps] : primary) std::sort(exps.begin(), exps.end(), std::greater<>());
  return primary;
}

FinAbGroup FinAbGroup::operator+(const FinAbGroup& rhs) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), rhs.torsion_.begin(), rhs.torsion_.end());
  return FinAbGroup(free_rank_ + rhs.free_rank_, orders);
}

FinAbGroup& FinAbGroup::operator+=(const FinAbGroup& rhs) { return *this = *this + rhs; }

FinAbGroup FinAbGroup::power(std::size_t k) const {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < k; ++i) orders.insert(orders.end(), torsion_.begin(), torsion_.end());
  return FinAbGroup(free_rank_ * k, orders);
}

std::string FinAbGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  else if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& [p, exps] : primary_view()) {
    // exps is descending; group equal exponents.
    for (std::size_t i = 0; i < exps.size();) {
      std::size_t j = i;
      while (j < exps.size() && exps[j] == exps[i]) ++j;
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      const std::size_t mult = j - i;
      if (mult == 1) parts.push_back("Z/" + pe.get_str());
      else parts.push_back("(Z/" + pe.get_str() + ")^" + std::to_string(mult));
      i = j;
    }
  }
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
  return os.str();
}

}  // namespace orbicoh
