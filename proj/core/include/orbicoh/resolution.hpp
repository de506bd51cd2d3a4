#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbicoh/int_matrix.hpp"
#include "orbicoh/lattice.hpp"
#include "orbicoh/laurent.hpp"
#include "orbicoh/matrix_group.hpp"

namespace orbicoh {

/// Koszul resolution of Z over Z[Z^n]. Degree j has basis the increasing
/// j-subsets S of {0..n-1}; differential(j)(R, S) is the coefficient of e_R in
/// d(e_S), with d(e_S) = sum_{p} (-1)^p (1 - x_{S[p]}) e_{S minus S[p]}.
class KoszulResolution {
 public:
  explicit KoszulResolution(std::size_t n);

  std::size_t rank() const noexcept { return n_; }
  std::size_t degree_rank(std::size_t j) const { return basis_.at(j).size(); }
  const std::vector<std::vector<std::size_t>>& basis(std::size_t j) const { return basis_.at(j); }
  /// Index of a subset inside basis(|S|).
  std::size_t index_of(const std::vector<std::size_t>& subset) const;
  /// d_j : F_j -> F_{j-1}, for 1 <= j <= n.
  const LaurentMatrix& differential(std::size_t j) const { return d_.at(j); }

  /// d_{j-1} d_j == 0 for all j, as Laurent matrices.
  bool composition_vanishes() const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::vector<std::size_t>>> basis_;
  std::vector<LaurentMatrix> d_;  // d_[0] unused
};

KoszulResolution koszul(std::size_t n);

/// A free resolution of Z over ZG, truncated at `max_degree`. Differentials are
/// stored sparsely: boundary(i)[a] lists terms c * g * e_b of d(e_a), for
/// a basis element e_a of P_i and e_b of P_{i-1}.
class FiniteGroupResolution {
 public:
  struct Term {
    std::size_t target = 0;
    std::size_t element = 0;
    long coeff = 0;
  };
  using Chain = std::vector<Term>;

  FiniteGroupResolution(GroupPtr group, std::string kind, std::vector<std::size_t> ranks,
                        std::vector<std::vector<Chain>> boundary);

  const GroupPtr& group() const noexcept { return group_; }
  const std::string& kind() const noexcept { return kind_; }
  std::size_t max_degree() const noexcept { return ranks_.size() - 1; }
  std::size_t rank(std::size_t i) const { return ranks_.at(i); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  /// boundary(i) for 1 <= i <= max_degree.
  const std::vector<Chain>& boundary(std::size_t i) const { return boundary_.at(i); }

  /// d o d == 0 in the group ring at every degree.
  bool composition_vanishes() const;
  /// The augmentation P_0 -> Z is onto and its kernel is the image of d_1.
  bool augmentation_exact() const;

 private:
  GroupPtr group_;
  std::string kind_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<Chain>> boundary_;
};

/// Rank one in every degree; d alternates (t - 1) in odd degrees and the norm
/// in even degrees, t the first element of order |G|. Throws NotCyclic.
FiniteGroupResolution periodic_cyclic(const GroupPtr& group, std::size_t max_degree);

/// P_1 (x) P_2 over Z[G_1 x G_2] with d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
/// `product` must be the internal direct product of the two factor groups (all
/// three share matrices). Throws NotDirectProduct.
FiniteGroupResolution tensor_resolutions(const FiniteGroupResolution& r1, const FiniteGroupResolution& r2,
                                         const GroupPtr& product);

inline constexpr std::size_t kDefaultBarGuard = 20000;

/// Normalized bar resolution: degree i has rank (|G|-1)^i. Throws
/// SizeGuardExceeded when rank(max_degree) * coefficient_rank > guard.
FiniteGroupResolution bar_truncated(const GroupPtr& group, std::size_t max_degree, std::size_t coefficient_rank = 1,
                                    std::size_t guard = kDefaultBarGuard);

/// The resolution for the trivial group: Z in degree 0 only.
FiniteGroupResolution trivial_resolution(const GroupPtr& group, std::size_t max_degree);

/// Cyclic subgroups whose internal direct product is G, or empty if the greedy
/// split fails (G non-abelian, or the complement search did not close up).
std::vector<Subgroup> cyclic_decomposition(const GroupPtr& group);

enum class ResolutionPolicy { Auto, Bar };

/// trivial -> Z; cyclic -> periodic; product of cyclics -> tensor of periodics;
/// otherwise truncated bar.
FiniteGroupResolution choose_resolution(const GroupPtr& group, std::size_t max_degree,
                                        ResolutionPolicy policy = ResolutionPolicy::Auto,
                                        std::size_t coefficient_rank = 1, std::size_t guard = kDefaultBarGuard);

/// Coboundaries delta^i : Hom_G(P_i, N) -> Hom_G(P_{i+1}, N) for 0 <= i <= top,
/// with Hom_G(P_i, N) = N^{rank P_i} written as stacked column vectors.
/// Requires top + 1 <= max_degree.
std::vector<IntMatrix> hom_cochain_complex(const FiniteGroupResolution& p, const ZGLattice& n, std::size_t top);

}  // namespace orbicoh
