#include "orbicoh/orbifold.hpp"

#include <algorithm>
#include <set>

#include "orbicoh/cohomology.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/models.hpp"
#include "orbicoh/resolution.hpp"

namespace orbicoh {

OrbifoldModel make_model(std::string name, ZGLattice lattice, std::vector<std::string> generator_names) {
  const std::size_t gens = lattice.group()->generators().size();
  if (generator_names.empty())
    for (std::size_t i = 0; i < gens; ++i) generator_names.push_back("g" + std::to_string(i + 1));
  if (generator_names.size() != gens) throw Error(ErrorKind::Malformed, "one name per generator");
  return OrbifoldModel{std::move(name), std::move(lattice), std::move(generator_names)};
}

std::string FlatGerbes::to_string() const {
  std::string out;
  if (circle_rank == 1) out = "U(1)";
  if (circle_rank > 1) out = "U(1)^" + std::to_string(circle_rank);
  if (!torsion.is_trivial()) out += (out.empty() ? "" : " + ") + torsion.to_string();
  return out.empty() ? "0" : out;
}

GerbeGroups gerbe_groups(const OrbifoldModel& model, bool force) {
  E2Result e2 = e2_assembly(model.lattice, 3, force);
  GerbeGroups out;
  out.h2 = e2.totals[2];
  out.h3 = e2.totals[3];
  out.flat.circle_rank = out.h2.free_rank();
  out.flat.torsion = out.h3.torsion_part();
  out.gerbes = out.h3;
  return out;
}

namespace {

ZGLattice restricted(const ZGLattice& m, const GroupPtr& sub, const std::vector<std::size_t>& parent_of) {
  std::vector<IntMatrix> action;
  action.reserve(parent_of.size());
  for (std::size_t p : parent_of) action.push_back(m.action(p));
  return ZGLattice(sub, std::move(action));
}

}  // namespace

SplittingClasses::SplittingClasses(const ZGLattice& m, const Subgroup& q) : m_(&m), parent_(m.group()) {
  if (q.parent() != parent_) throw Error(ErrorKind::GroupMismatch, "subgroup of a different group");
  sub_ = q.as_group();
  parent_of_ = q.parent_indices(*sub_);
  rank_ = m.rank();
  ZGLattice res = restricted(m, sub_, parent_of_);
  FiniteGroupResolution bar = bar_truncated(sub_, 2, rank_);
  auto deltas = hom_cochain_complex(bar, res, 1);
  kernel_ = kernel_basis(deltas[1]);
  kernel_snf_ = smith_form(kernel_);
  const std::size_t z = kernel_.cols();
  // Coordinates of the coboundaries in the kernel basis.
  IntMatrix coords(z, deltas[0].cols());
  IntMatrix ub = kernel_snf_.U * deltas[0];
  IntMatrix w(z, deltas[0].cols());
  for (std::size_t i = 0; i < z; ++i)
    for (std::size_t c = 0; c < deltas[0].cols(); ++c) w(i, c) = ub(i, c) / kernel_snf_.d[i];
  coords = kernel_snf_.V * w;
  quotient_snf_ = smith_form(coords);
  quotient_u_inverse_ = quotient_snf_.U.unimodular_inverse();
  std::vector<Integer> torsion;
  std::size_t free = 0;
  for (std::size_t i = 0; i < z; ++i) {
    Integer d = i < quotient_snf_.d.size() ? quotient_snf_.d[i] : Integer(0);
    orders_.push_back(d);
    if (d == 0) ++free;
    else if (d > 1) torsion.push_back(d);
  }
  h1_ = FinAbGroup(free, torsion);
}

std::vector<Integer> SplittingClasses::class_of(const IntMatrix& cocycle) const {
  const std::size_t z = kernel_.cols();
  IntMatrix uc = kernel_snf_.U * cocycle;
  for (std::size_t i = z; i < uc.rows(); ++i)
    if (sgn(uc(i, 0)) != 0) throw Error(ErrorKind::Inconsistent, "not a cocycle");
  IntMatrix w(z, 1);
  for (std::size_t i = 0; i < z; ++i) w(i, 0) = uc(i, 0) / kernel_snf_.d[i];
  IntMatrix y = quotient_snf_.U * (kernel_snf_.V * w);
  std::vector<Integer> out(z);
  for (std::size_t i = 0; i < z; ++i) {
    out[i] = y(i, 0);
    if (orders_[i] != 0) mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), orders_[i].get_mpz_t());
  }
  return out;
}

IntMatrix SplittingClasses::representative(const std::vector<Integer>& coords) const {
  IntMatrix y(coords.size(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) y(i, 0) = coords[i];
  return kernel_ * (quotient_u_inverse_ * y);
}

std::vector<std::vector<Integer>> SplittingClasses::enumerate(std::size_t limit) const {
  if (!h1_.is_finite()) throw Error(ErrorKind::OutOfRange, "H^1 is infinite");
  if (h1_.order() > limit)
    throw Error(ErrorKind::SizeGuardExceeded, "H^1 has " + h1_.order().get_str() + " classes");
  std::vector<std::size_t> digits;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (orders_[i] > 1) digits.push_back(i);
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur(orders_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t k = digits.size();
    while (k > 0) {
      const std::size_t i = digits[--k];
      cur[i] += 1;
      if (cur[i] < orders_[i]) break;
      cur[i] = 0;
      if (k == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

IntMatrix SplittingClasses::act(std::size_t n, const IntMatrix& cocycle) const {
  IntMatrix out(cocycle.rows(), 1);
  const IntMatrix& a = m_->action(n);
  const std::size_t n_inv = parent_->inverse(n);
  for (std::size_t s = 1; s < sub_->order(); ++s) {
    const std::size_t conj = parent_->conjugate(parent_of_[s], n_inv);  // n^-1 q n
    const std::size_t t = sub_->find(parent_->matrix(conj));
    if (t == FiniteMatrixGroup::npos || t == 0) throw Error(ErrorKind::Inconsistent, "element does not normalize Q");
    for (std::size_t y = 0; y < rank_; ++y) {
      Integer v = 0;
      for (std::size_t x = 0; x < rank_; ++x) v += cocycle((t - 1) * rank_ + x, 0) * a(x, y);
      out((s - 1) * rank_ + y, 0) = v;
    }
  }
  return out;
}

std::vector<Integer> SplittingClasses::value(const IntMatrix& cocycle, std::size_t parent_element) const {
  const std::size_t s = sub_->find(parent_->matrix(parent_element));
  if (s == FiniteMatrixGroup::npos) throw Error(ErrorKind::OutOfRange, "element outside Q");
  std::vector<Integer> out(rank_, 0);
  if (s == 0) return out;
  for (std::size_t x = 0; x < rank_; ++x) out[x] = cocycle((s - 1) * rank_ + x, 0);
  return out;
}

FixedPointReport fixed_points(const OrbifoldModel& model, const Subgroup& q) {
  FixedPointReport out;
  out.subgroup = q.members();
  SplittingClasses sc(model.lattice, q);
  out.h1 = sc.group();
  out.component_count = out.h1.order();
  GroupPtr sub = sc.subgroup_group();
  ZGLattice res = restricted(model.lattice, sub, q.parent_indices(*sub));
  out.component_dimension = invariants(res).rank;
  if (out.component_count <= 64) {
    const auto parents = q.parent_indices(*sub);
    for (const auto& coords : sc.enumerate()) {
      IntMatrix f = sc.representative(coords);
      std::vector<std::vector<Integer>> values;
      for (std::size_t g : sub->generator_indices()) values.push_back(sc.value(f, parents[g]));
      out.classes.push_back(std::move(values));
    }
  }
  return out;
}

ClassReport order_p_subgroup_classes(const OrbifoldModel& model, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const ZGLattice& m = model.lattice;
  const GroupPtr& group = m.group();
  ClassReport report;
  report.prime = p;
  for (const Subgroup& q : order_p_subgroup_class_representatives(group, p)) {
    SubgroupClasses entry;
    entry.subgroup = q.members();
    Subgroup norm = normalizer(q);
    entry.normalizer = norm.members();
    SplittingClasses sc(m, q);
    entry.h1 = sc.group();
    const auto all = sc.enumerate();
    entry.class_count = all.size();
    GroupPtr sub = sc.subgroup_group();
    FixedSublattice fixed = invariants(restricted(m, sub, q.parent_indices(*sub)));
    std::set<std::vector<Integer>> seen;
    for (const auto& start : all) {
      if (seen.count(start)) continue;
      SplittingOrbit orbit;
      std::vector<std::vector<Integer>> queue{start};
      seen.insert(start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        IntMatrix f = sc.representative(queue[head]);
        for (std::size_t n : norm.members()) {
          auto image = sc.class_of(sc.act(n, f));
          if (seen.insert(image).second) queue.push_back(image);
        }
      }
      IntMatrix f = sc.representative(start);
      for (std::size_t n : norm.members())
        if (sc.class_of(sc.act(n, f)) == start) orbit.stabilizer.push_back(n);
      orbit.classes = std::move(queue);
      std::sort(orbit.classes.begin(), orbit.classes.end());
      orbit.fixed_rank = fixed.rank;
      orbit.acts_trivially = true;
      for (std::size_t s : orbit.stabilizer)
        if (!(fixed.basis * m.action(s) == fixed.basis)) orbit.acts_trivially = false;
      orbit.stabilizer_name = Subgroup(group, orbit.stabilizer).as_group()->structure_name();
      std::string lattice_part = fixed.rank == 0 ? "" : fixed.rank == 1 ? "Z" : "Z^" + std::to_string(fixed.rank);
      orbit.fingerprint = lattice_part.empty() ? orbit.stabilizer_name
                                               : lattice_part + (orbit.acts_trivially ? " x " : " ⋊ ") +
                                                     orbit.stabilizer_name;
      ++report.fingerprints[orbit.fingerprint];
      entry.orbits.push_back(std::move(orbit));
    }
    report.total += entry.orbits.size();
    report.subgroups.push_back(std::move(entry));
  }
  return report;
}

FinAbGroup abelianization(const OrbifoldModel& model) {
  return coinvariants(model.lattice) + group_abelianization(model.lattice.group());
}

std::vector<BrownRow> brown_stable_check(const OrbifoldModel& model, const std::vector<std::size_t>& degrees) {
  const ZGLattice y1 = models::y1();
  const ZGLattice& m = model.lattice;
  if (m.rank() != y1.rank() || m.group()->elements() != y1.group()->elements() || m.actions() != y1.actions())
    throw Error(ErrorKind::UnsupportedModel, "the stable-range decomposition is only encoded for the Y1 lattice");
  std::size_t top = 0;
  for (std::size_t i : degrees) {
    if (i <= 6) throw Error(ErrorKind::OutOfRange, "stable range starts above degree 6");
    top = std::max(top, i);
  }
  if (degrees.empty()) return {};
  E2Result lhs = e2_assembly(m, top);
  E2Result trivial = e2_assembly(models::brown_trivial_z2(), top);
  E2Result twisted = e2_assembly(models::brown_minus_identity_z4(), top);
  std::vector<BrownRow> rows;
  for (std::size_t i : degrees) {
    BrownRow row;
    row.degree = i;
    row.lhs = lhs.totals[i];
    row.trivial_part = trivial.totals[i];
    row.twisted_part = twisted.totals[i];
    row.rhs = row.trivial_part.power(6) + row.twisted_part.power(4);
    row.agree = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace orbicoh
