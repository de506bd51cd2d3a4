#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/lattice.hpp"
#include "orbicoh/matrix_group.hpp"
#include "orbicoh/smith.hpp"

namespace orbicoh {

/// T^n / G with orbifold fundamental group M x| G (always split).
struct OrbifoldModel {
  std::string name;
  ZGLattice lattice;
  std::vector<std::string> generator_names;
};

OrbifoldModel make_model(std::string name, ZGLattice lattice, std::vector<std::string> generator_names = {});

/// U(1)^circle_rank + torsion.
struct FlatGerbes {
  std::size_t circle_rank = 0;
  FinAbGroup torsion;
  std::string to_string() const;
};

struct GerbeGroups {
  FlatGerbes flat;  // U(1)^{rank H^2} + T(H^3)
  FinAbGroup gerbes;  // H^3
  FinAbGroup h2;
  FinAbGroup h3;
};

GerbeGroups gerbe_groups(const OrbifoldModel& model, bool force = false);

/// H^1(Q, M) computed from the normalized bar resolution of Q, with explicit
/// cocycles. A cocycle is a column vector stacking f(q) for the non-identity
/// elements q of `sub` in index order.
class SplittingClasses {
 public:
  SplittingClasses(const ZGLattice& m, const Subgroup& q);

  const FinAbGroup& group() const noexcept { return h1_; }
  const GroupPtr& subgroup_group() const noexcept { return sub_; }
  /// Canonical coordinates of the class of a cocycle (reduced mod the orders).
  std::vector<Integer> class_of(const IntMatrix& cocycle) const;
  /// A cocycle in the class with the given canonical coordinates.
  IntMatrix representative(const std::vector<Integer>& coords) const;
  /// All canonical coordinate vectors, in lexicographic order. Throws
  /// SizeGuardExceeded above `limit` classes.
  std::vector<std::vector<Integer>> enumerate(std::size_t limit = 4096) const;
  /// The cocycle n.f with (n.f)(q) = n.f(n^-1 q n) for n normalizing Q.
  IntMatrix act(std::size_t n, const IntMatrix& cocycle) const;
  /// f(q) for an element q of Q given by its parent index.
  std::vector<Integer> value(const IntMatrix& cocycle, std::size_t parent_element) const;

 private:
  const ZGLattice* m_;
  GroupPtr parent_;
  GroupPtr sub_;
  std::vector<std::size_t> parent_of_;
  std::size_t rank_ = 0;
  IntMatrix kernel_;  // columns: basis of Z^1
  SmithForm kernel_snf_;
  SmithForm quotient_snf_;
  IntMatrix quotient_u_inverse_;
  std::vector<Integer> orders_;  // per quotient coordinate; 1 = trivial coordinate
  FinAbGroup h1_;
};

struct FixedPointReport {
  std::vector<std::size_t> subgroup;  // parent indices
  FinAbGroup h1;
  Integer component_count;
  std::size_t component_dimension = 0;
  /// f(generator) for each generator of Q, per class (at most 64 listed).
  std::vector<std::vector<std::vector<Integer>>> classes;
};

FixedPointReport fixed_points(const OrbifoldModel& model, const Subgroup& q);

struct SplittingOrbit {
  std::vector<std::vector<Integer>> classes;  // canonical coordinates
  std::vector<std::size_t> stabilizer;        // parent indices
  std::string stabilizer_name;
  std::size_t fixed_rank = 0;
  bool acts_trivially = false;
  std::string fingerprint;
};

struct SubgroupClasses {
  std::vector<std::size_t> subgroup;
  std::vector<std::size_t> normalizer;
  FinAbGroup h1;
  std::size_t class_count = 0;
  std::vector<SplittingOrbit> orbits;
};

struct ClassReport {
  long prime = 0;
  std::vector<SubgroupClasses> subgroups;
  std::size_t total = 0;
  std::map<std::string, std::size_t> fingerprints;
};

/// Conjugacy classes in M x| G of subgroups of order p mapping isomorphically
/// to G: one entry per G-class of Q, with the N_G(Q)-orbits on H^1(Q, M).
/// Throws NotPrime.
ClassReport order_p_subgroup_classes(const OrbifoldModel& model, long p);

/// (M x| G)_ab = M_G + G_ab.
FinAbGroup abelianization(const OrbifoldModel& model);

struct BrownRow {
  std::size_t degree = 0;
  FinAbGroup lhs;
  FinAbGroup trivial_part;  // H^i of Z^2 x Z/2
  FinAbGroup twisted_part;  // H^i of Z^2 x| Z/4 with t -> -I
  FinAbGroup rhs;           // trivial_part^6 + twisted_part^4
  bool agree = false;
};

/// Stable-range decomposition for the Y1 model in degrees > 6. Throws
/// UnsupportedModel for any other lattice, OutOfRange for degrees <= 6.
std::vector<BrownRow> brown_stable_check(const OrbifoldModel& model, const std::vector<std::size_t>& degrees);

}  // namespace orbicoh
