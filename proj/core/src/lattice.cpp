#include "orbicoh/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "orbicoh/error.hpp"
#include "orbicoh/smith.hpp"

namespace orbicoh {

ZGLattice::ZGLattice(GroupPtr group, std::vector<IntMatrix> action) : group_(std::move(group)), action_(std::move(action)) {
  if (!group_) throw Error(ErrorKind::Malformed, "lattice without a group");
  if (action_.size() != group_->order())
    throw Error(ErrorKind::NotHomomorphism, "need one action matrix per group element");
  rank_ = action_.empty() ? 0 : action_[0].rows();
  for (const auto& a : action_)
    if (a.rows() != rank_ || a.cols() != rank_) throw Error(ErrorKind::DimensionMismatch, "action matrices differ in size");
  if (!action_[FiniteMatrixGroup::identity()].is_identity())
    throw Error(ErrorKind::NotHomomorphism, "identity does not act trivially");
  for (std::size_t g = 0; g < group_->order(); ++g)
    for (std::size_t h = 0; h < group_->order(); ++h)
      if (action_[group_->multiply(g, h)] != action_[h] * action_[g])
        throw Error(ErrorKind::NotHomomorphism, "action(g*h) != action(h)*action(g) for elements " + std::to_string(g) +
                                                    ", " + std::to_string(h));
}

ZGLattice ZGLattice::defining(const GroupPtr& group) { return ZGLattice(group, group->elements()); }

ZGLattice ZGLattice::trivial(const GroupPtr& group, std::size_t rank) {
  return ZGLattice(group, std::vector<IntMatrix>(group->order(), IntMatrix::identity(rank)));
}

ZGLattice ZGLattice::from_generator_images(const GroupPtr& group, const std::vector<IntMatrix>& images) {
  const auto& gens = group->generator_indices();
  if (images.size() != gens.size()) throw Error(ErrorKind::Malformed, "need one image per group generator");
  const std::size_t rank = images.empty() ? 0 : images[0].rows();
  std::vector<IntMatrix> action(group->order());
  std::vector<char> known(group->order(), 0);
  action[0] = IntMatrix::identity(rank);
  known[0] = 1;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t g = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t next = group->multiply(g, gens[k]);
      if (known[next]) continue;
      action[next] = images[k] * action[g];
      known[next] = 1;
      queue.push_back(next);
    }
  }
  return ZGLattice(group, std::move(action));
}

ZGLattice dual(const ZGLattice& m) {
  std::vector<IntMatrix> action;
  action.reserve(m.actions().size());
  for (const auto& a : m.actions()) action.push_back(a.unimodular_inverse().transpose());
  return ZGLattice(m.group(), std::move(action));
}

ZGLattice direct_sum(const std::vector<ZGLattice>& ms) {
  if (ms.empty()) throw Error(ErrorKind::Malformed, "direct sum of no lattices");
  for (const auto& m : ms)
    if (m.group() != ms[0].group()) throw Error(ErrorKind::GroupMismatch, "direct sum over different groups");
  std::vector<IntMatrix> action(ms[0].group()->order());
  for (std::size_t g = 0; g < action.size(); ++g) {
    IntMatrix acc(0, 0);
    for (const auto& m : ms) acc = IntMatrix::direct_sum(acc, m.action(g));
    action[g] = std::move(acc);
  }
  return ZGLattice(ms[0].group(), std::move(action));
}

ZGLattice tensor(const ZGLattice& m, const ZGLattice& n) {
  if (m.group() != n.group()) throw Error(ErrorKind::GroupMismatch, "tensor over different groups");
  std::vector<IntMatrix> action(m.group()->order());
  for (std::size_t g = 0; g < action.size(); ++g) action[g] = IntMatrix::kronecker(m.action(g), n.action(g));
  return ZGLattice(m.group(), std::move(action));
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t j) {
  std::vector<std::vector<std::size_t>> out;
  if (j > n) return out;
  std::vector<std::size_t> cur(j);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = j;
    while (i > 0 && cur[i - 1] == n - j + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t k = i; k < j; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

ZGLattice exterior_power(const ZGLattice& m, std::size_t j) {
  if (j > m.rank())
    throw Error(ErrorKind::OutOfRange, "exterior power " + std::to_string(j) + " of a rank-" + std::to_string(m.rank()) +
                                           " lattice");
  const auto subsets = index_subsets(m.rank(), j);
  std::vector<IntMatrix> action(m.group()->order());
  for (std::size_t g = 0; g < action.size(); ++g) {
    IntMatrix c(subsets.size(), subsets.size());
    for (std::size_t r = 0; r < subsets.size(); ++r)
      for (std::size_t s = 0; s < subsets.size(); ++s) c(r, s) = m.action(g).submatrix(subsets[r], subsets[s]).determinant();
    action[g] = std::move(c);
  }
  return ZGLattice(m.group(), std::move(action));
}

ZGLattice restrict_to(const ZGLattice& m, const Subgroup& q) {
  if (q.parent() != m.group()) throw Error(ErrorKind::GroupMismatch, "subgroup of a different group");
  GroupPtr sub = q.as_group();
  auto idx = q.parent_indices(*sub);
  std::vector<IntMatrix> action;
  action.reserve(sub->order());
  for (std::size_t i : idx) action.push_back(m.action(i));
  return ZGLattice(sub, std::move(action));
}

IntMatrix augmentation_relations(const ZGLattice& m) {
  // Columns (A_g - I)^T e_i: the row vectors e_i (A_g - I) written as columns.
  IntMatrix rel(m.rank(), 0);
  const IntMatrix id = IntMatrix::identity(m.rank());
  for (std::size_t g : m.group()->generator_indices()) rel = IntMatrix::hstack(rel, (m.action(g) - id).transpose());
  return rel;
}

FixedSublattice invariants(const ZGLattice& m) {
  // v (A_g - I) = 0 for all generators  <=>  relations^T v^T = 0.
  IntMatrix rel = augmentation_relations(m);
  FixedSublattice out;
  if (rel.cols() == 0) {
    out.rank = m.rank();
    out.basis = IntMatrix::identity(m.rank());
    return out;
  }
  IntMatrix k = kernel_basis(rel.transpose());
  out.rank = k.cols();
  out.basis = k.transpose();
  return out;
}

FinAbGroup coinvariants(const ZGLattice& m) {
  IntMatrix rel = augmentation_relations(m);
  if (rel.cols() == 0) return FinAbGroup::free(m.rank());
  return cokernel_group(rel);
}

namespace {

std::vector<std::vector<std::size_t>> support_components(const std::vector<IntMatrix>& mats, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : mats)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c && sgn(a(r, c)) != 0) parent[find(r)] = find(c);
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (block_of[root] == static_cast<std::size_t>(-1)) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(i);
  }
  return blocks;
}

std::size_t largest(const std::vector<std::vector<std::size_t>>& blocks) {
  std::size_t m = 0;
  for (const auto& b : blocks) m = std::max(m, b.size());
  return m;
}

}  // namespace

std::vector<std::vector<std::size_t>> coordinate_blocks(const ZGLattice& m) {
  return support_components(m.actions(), m.rank());
}

BlockDecomposition block_decomposition_in_basis(const ZGLattice& m) {
  BlockDecomposition out;
  out.blocks = coordinate_blocks(m);
  out.max_block = largest(out.blocks);
  out.hypothesis_holds = true;
  for (long p : prime_divisors(m.group()->order())) {
    Subgroup sylow = sylow_subgroup(m.group(), p);
    std::vector<IntMatrix> mats;
    for (std::size_t g : sylow.members()) mats.push_back(m.action(g));
    BlockDecomposition::SylowCheck check;
    check.prime = p;
    check.blocks = support_components(mats, m.rank());
    check.small = largest(check.blocks) <= 2;
    out.hypothesis_holds = out.hypothesis_holds && check.small;
    out.sylow.push_back(std::move(check));
  }
  return out;
}

ZGLattice block_lattice(const ZGLattice& m, const std::vector<std::size_t>& block) {
  std::vector<IntMatrix> action;
  action.reserve(m.actions().size());
  for (const auto& a : m.actions()) action.push_back(a.submatrix(block, block));
  return ZGLattice(m.group(), std::move(action));
}

std::vector<Integer> trace_character(const ZGLattice& m) {
  std::vector<Integer> chi;
  chi.reserve(m.actions().size());
  for (const auto& a : m.actions()) chi.push_back(a.trace());
  return chi;
}

}  // namespace orbicoh
