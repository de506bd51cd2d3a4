#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "orbicoh/lattice.hpp"
#include "orbicoh/laurent.hpp"
#include "orbicoh/matrix_group.hpp"
#include "orbicoh/resolution.hpp"

namespace orbicoh {

/// A compatible action of G on the Koszul resolution of Z over Z[M]: for each
/// element g the semilinear chain map f -> T_g * sigma_g(f) with sigma_g the
/// ring automorphism of action(g). T[g][j] is C(n,j) x C(n,j); column S holds
/// the image of e_S.
struct CompatibleAction {
  ZGLattice lattice;
  std::shared_ptr<const KoszulResolution> koszul;
  std::vector<RingAuto> sigma;
  std::vector<std::vector<LaurentMatrix>> T;
  std::string source;

  const GroupPtr& group() const { return lattice.group(); }
  std::size_t rank() const { return lattice.rank(); }
};

struct Witness {
  std::string condition;
  std::size_t degree = 0;
  std::size_t g = 0;
  std::size_t h = 0;
  /// Nonzero residual entries as "(r,c): poly".
  std::vector<std::string> residual;
};

struct Certificate {
  bool identity = false;      // T_1 = I
  bool degree_zero = false;   // T_g[0] = (1)
  bool chain_map = false;     // T_g[j-1] sigma_g(D_j) = D_j T_g[j]
  bool cocycle = false;       // T_{gh} = T_g sigma_g(T_h)
  bool coefficients = false;  // augment(T_{g^-1}[j]) = Lambda^j(M*)(g)
  bool verified = false;
  std::vector<Witness> witnesses;
};

Certificate verify(const CompatibleAction& action);

enum class CatalogCase { Trivial, Sign, Swap, Z3, Z4, Klein, D8a, D8b };

std::string to_string(CatalogCase c);
/// The catalog group's generator matrices.
std::vector<IntMatrix> catalog_generators(CatalogCase c);
/// The catalog action on the defining lattice of the catalog group.
CompatibleAction catalog_action(CatalogCase c);
/// Matches the image of `block` against the catalog groups and pulls the
/// catalog action back. Throws NotInCatalog.
CompatibleAction catalog_action(const ZGLattice& block);

/// Extends generator matrices T_s to all elements by the cocycle rule.
CompatibleAction extend_from_generators(const ZGLattice& lattice, const std::vector<std::vector<LaurentMatrix>>& gen_T,
                                        std::string source);

/// Chain-map solution for the cyclic group generated by a rank-2 matrix A,
/// corrected by homogeneous terms until the order condition holds. Throws
/// NotUnimodular, BoundExceeded, Inconsistent or OrderConditionFailed.
CompatibleAction solve_rank2(const IntMatrix& a);

/// T_g = T'_{pi(g)} on `target`, whose action must be action'(pi(g)).
/// Throws NotHomomorphism.
CompatibleAction pullback(const CompatibleAction& action, const ZGLattice& target, const std::vector<std::size_t>& pi);

/// Actions on coordinate blocks of `whole` combined by the Koszul sign rule.
/// Throws GroupMismatch.
CompatibleAction assemble_direct_sum(const ZGLattice& whole, const std::vector<std::vector<std::size_t>>& blocks,
                                     const std::vector<CompatibleAction>& parts);

enum class ActionSource { Auto, Catalog, Solver };

/// Splits `m` into coordinate blocks and builds a certified action block by
/// block: catalog for rank 1, catalog or solver for rank 2. Throws
/// NotInCatalog for blocks of rank >= 3 or unmatched images, and
/// UncertifiedAction if the assembled action does not verify.
CompatibleAction build_action(const ZGLattice& m, ActionSource source = ActionSource::Auto);

}  // namespace orbicoh
