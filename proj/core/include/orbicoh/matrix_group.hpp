#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/int_matrix.hpp"

namespace orbicoh {

inline constexpr std::size_t kDefaultGroupBound = 1024;

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// A finite subgroup of GL_n(Z) given by generators, with its full element
/// table.
///
/// Elements act on row vectors, v -> v * A_g, as a *left* action: the product
/// g*h is the element whose matrix is A_h * A_g, so that (g*h).v = g.(h.v).
/// Element 0 is the identity; the remaining elements are listed breadth-first
/// from the identity, trying generators in the order given.
class FiniteMatrixGroup {
 public:
  /// Throws NotUnimodular for a generator with det != +-1 (or non-square /
  /// wrong size) and BoundExceeded once more than `bound` elements appear.
  static GroupPtr enumerate(std::size_t n, const std::vector<IntMatrix>& generators,
                            std::size_t bound = kDefaultGroupBound);
  static GroupPtr trivial(std::size_t n) { return enumerate(n, {}); }

  std::size_t dimension() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<IntMatrix>& generators() const noexcept { return generators_; }
  /// Element indices of the generators (duplicates and identities allowed).
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }
  const IntMatrix& matrix(std::size_t g) const { return elements_.at(g); }
  const std::vector<IntMatrix>& elements() const noexcept { return elements_; }

  static constexpr std::size_t identity() noexcept { return 0; }
  std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g * order() + h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  std::size_t power(std::size_t g, long k) const;
  std::size_t conjugate(std::size_t g, std::size_t by) const;  // by * g * by^-1
  /// Index of the element with this matrix, or npos.
  std::size_t find(const IntMatrix& m) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t element_order(std::size_t g) const { return orders_.at(g); }
  bool is_abelian() const;
  /// Index of an element of order |G|, or npos when G is not cyclic.
  std::size_t cyclic_generator() const;
  bool is_cyclic() const { return cyclic_generator() != npos; }

  /// Small-group label from order statistics: "1", "Z/4", "(Z/2)^2", "D8", ...
  std::string structure_name() const;

 private:
  FiniteMatrixGroup() = default;

  std::size_t n_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<IntMatrix> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
};

/// A subgroup of a FiniteMatrixGroup, as a sorted list of element indices.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<std::size_t> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(std::size_t g) const;
  bool operator==(const Subgroup& rhs) const { return members_ == rhs.members_; }

  /// The subgroup as a group in its own right, with the same matrices.
  GroupPtr as_group() const;
  /// For each element of as_group(), its index in the parent.
  std::vector<std::size_t> parent_indices(const FiniteMatrixGroup& sub) const;

 private:
  GroupPtr parent_;
  std::vector<std::size_t> members_;
};

/// Closure of a set of elements under the parent's multiplication.
Subgroup subgroup_generated(const GroupPtr& group, const std::vector<std::size_t>& elements);
Subgroup whole_group(const GroupPtr& group);

/// A p-Sylow subgroup, found by growing a p-subgroup one p-element at a time in
/// element order. Throws NotPrime.
Subgroup sylow_subgroup(const GroupPtr& group, long p);

Subgroup normalizer(const Subgroup& q);
Subgroup conjugate_subgroup(const Subgroup& q, std::size_t by);
Subgroup commutator_subgroup(const GroupPtr& group);

/// One representative per conjugacy class of subgroups of order p (p prime),
/// in order of first appearance.
std::vector<Subgroup> order_p_subgroup_class_representatives(const GroupPtr& group, long p);

/// G / [G, G] in invariant-factor form.
FinAbGroup group_abelianization(const GroupPtr& group);

std::size_t element_order(const FiniteMatrixGroup& group, std::size_t g);

/// The distinct primes dividing |G|, ascending.
std::vector<long> prime_divisors(std::size_t n);

}  // namespace orbicoh
