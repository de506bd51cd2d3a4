#pragma once

#include <cstddef>
#include <vector>

#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/int_matrix.hpp"
#include "orbicoh/matrix_group.hpp"

namespace orbicoh {

/// A ZG-lattice: Z^rank with a row-vector left action of a finite matrix group,
/// v -> v * action(g). Because products compose right-to-left on rows,
/// action(g*h) == action(h) * action(g). The action need not be faithful.
class ZGLattice {
 public:
  ZGLattice() = default;
  /// Validates that `action` has one rank x rank unimodular matrix per element
  /// and is a homomorphism. Throws NotHomomorphism / NotUnimodular.
  ZGLattice(GroupPtr group, std::vector<IntMatrix> action);

  /// The lattice Z^n on which G acts through its own matrices.
  static ZGLattice defining(const GroupPtr& group);
  static ZGLattice trivial(const GroupPtr& group, std::size_t rank);
  /// Extends images of the group's generators to the whole group.
  static ZGLattice from_generator_images(const GroupPtr& group, const std::vector<IntMatrix>& images);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }

  bool operator==(const ZGLattice& rhs) const { return group_ == rhs.group_ && action_ == rhs.action_; }

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

/// Contragredient: action(g) -> action(g)^{-T}.
ZGLattice dual(const ZGLattice& m);
/// Block-diagonal sum. Throws GroupMismatch.
ZGLattice direct_sum(const std::vector<ZGLattice>& ms);
/// Kronecker action on the basis e_i (x) f_j in lexicographic order.
ZGLattice tensor(const ZGLattice& m, const ZGLattice& n);
/// Lambda^j on increasing index subsets in lexicographic order; entries are
/// j x j minors. Throws OutOfRange unless 0 <= j <= rank.
ZGLattice exterior_power(const ZGLattice& m, std::size_t j);
/// Restriction to a subgroup; the result lives on q.as_group().
ZGLattice restrict_to(const ZGLattice& m, const Subgroup& q);

struct FixedSublattice {
  std::size_t rank = 0;
  /// Rows form a basis of M^G; the span is saturated in Z^rank(M).
  IntMatrix basis;
};

FixedSublattice invariants(const ZGLattice& m);
/// M_G = M / span{v (A_g - I)} over the group's generators.
FinAbGroup coinvariants(const ZGLattice& m);
/// The matrix whose columns span {v (A_g - I)} (as column vectors), generators stacked.
IntMatrix augmentation_relations(const ZGLattice& m);

struct BlockDecomposition {
  /// Coordinate blocks (0-based), each sorted, ordered by first coordinate.
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t max_block = 0;
  struct SylowCheck {
    long prime = 0;
    std::vector<std::vector<std::size_t>> blocks;
    bool small = false;  // every block has size <= 2
  };
  std::vector<SylowCheck> sylow;
  /// True iff every Sylow restriction splits into blocks of size <= 2 in this basis.
  bool hypothesis_holds = false;
};

/// Finest coordinate partition for which all action matrices are block diagonal
/// (components of the off-diagonal support graph). Basis dependent.
BlockDecomposition block_decomposition_in_basis(const ZGLattice& m);
std::vector<std::vector<std::size_t>> coordinate_blocks(const ZGLattice& m);
/// The sublattice on a block of coordinates (the action must be block diagonal).
ZGLattice block_lattice(const ZGLattice& m, const std::vector<std::size_t>& block);

/// trace(action(g)) for each element g.
std::vector<Integer> trace_character(const ZGLattice& m);

/// Increasing j-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t j);

}  // namespace orbicoh
