#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbicoh/compatible_action.hpp"
#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/lattice.hpp"
#include "orbicoh/resolution.hpp"

namespace orbicoh {

/// H^0..H^top(G, N) from a given resolution (needs max_degree >= top + 1).
std::vector<FinAbGroup> group_cohomology(const FiniteGroupResolution& p, const ZGLattice& n, std::size_t top);
/// H^0..H^top(G, N) with the resolution picked by `policy`.
std::vector<FinAbGroup> group_cohomology_range(const ZGLattice& n, std::size_t top,
                                               ResolutionPolicy policy = ResolutionPolicy::Auto,
                                               std::size_t guard = kDefaultBarGuard);
FinAbGroup group_cohomology(const ZGLattice& n, std::size_t i, ResolutionPolicy policy = ResolutionPolicy::Auto);

/// cells[j][i] = H^i(G, Lambda^j(M*)) for i + j <= max_degree.
struct E2Page {
  std::size_t max_degree = 0;
  std::size_t rank = 0;
  std::vector<std::vector<FinAbGroup>> cells;
  std::string resolution;
  bool hypothesis_holds = false;
  bool forced = false;

  const FinAbGroup& at(std::size_t i, std::size_t j) const { return cells.at(j).at(i); }
};

struct E2Result {
  E2Page page;
  /// Anti-diagonal sums H^0..H^max_degree.
  std::vector<FinAbGroup> totals;
};

/// Throws HypothesisUnverified when some Sylow restriction of `m` has a
/// coordinate block of rank > 2, unless `force`.
E2Result e2_assembly(const ZGLattice& m, std::size_t max_degree, bool force = false,
                     ResolutionPolicy policy = ResolutionPolicy::Auto, std::size_t guard = kDefaultBarGuard);

/// Hom_Gamma(P (x) F, Z) with F the Koszul resolution. Degree-k basis: pairs
/// (e_a in P_i, e_S with |S| = j), i + j = k, ordered by i, then a, then S.
struct TotalComplex {
  std::vector<std::size_t> ranks;
  /// coboundaries[k] : C^k -> C^{k+1}
  std::vector<IntMatrix> coboundaries;
};

/// Throws UncertifiedAction unless the action verifies, OutOfRange if P is too short.
TotalComplex total_complex(const CompatibleAction& action, const FiniteGroupResolution& p, std::size_t top);
/// H^0..H^top of the total complex.
std::vector<FinAbGroup> total_complex_cohomology(const CompatibleAction& action, const FiniteGroupResolution& p,
                                                 std::size_t top);
/// dim over F_p of H^0..H^top of the total complex reduced mod p. Throws NotPrime.
std::vector<std::size_t> mod_p_cohomology(const CompatibleAction& action, const FiniteGroupResolution& p,
                                          std::size_t top, long prime);
/// d o d == 0 for the differential of P (x) F over Z[Gamma], degrees <= top + 1.
bool total_composition_vanishes(const CompatibleAction& action, const FiniteGroupResolution& p, std::size_t top);

struct CollapseRow {
  std::size_t degree = 0;
  FinAbGroup e2;
  FinAbGroup total;
  bool agree = false;
};

struct CollapseReport {
  std::vector<CollapseRow> rows;
  E2Page page;
  Certificate certificate;
  std::string action_source;
  std::string resolution;
  bool all_agree = false;
};

CollapseReport collapse_verify(const ZGLattice& m, std::size_t max_degree, ActionSource source = ActionSource::Auto,
                               bool force = false);

/// Universal coefficients: dim H^k(F_p) = rank H^k + t_p(H^k) + t_p(H^{k+1}).
std::size_t uct_mod_p_dimension(const FinAbGroup& hk, const FinAbGroup& hk1, long prime);

}  // namespace orbicoh
