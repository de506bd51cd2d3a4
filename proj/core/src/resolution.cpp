#include "orbicoh/resolution.hpp"

#include <algorithm>
#include <map>

#include "orbicoh/error.hpp"
#include "orbicoh/smith.hpp"

namespace orbicoh {

KoszulResolution::KoszulResolution(std::size_t n) : n_(n) {
  for (std::size_t j = 0; j <= n; ++j) basis_.push_back(index_subsets(n, j));
  d_.resize(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    LaurentMatrix d(basis_[j - 1].size(), basis_[j].size(), n);
    for (std::size_t s = 0; s < basis_[j].size(); ++s) {
      const auto& subset = basis_[j][s];
      for (std::size_t p = 0; p < subset.size(); ++p) {
        std::vector<std::size_t> face = subset;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(p));
        LaurentPoly entry = LaurentPoly::one_minus_x(n, subset[p]);
        d(index_of(face), s) = (p % 2 == 0) ? entry : -entry;
      }
    }
    d_[j] = std::move(d);
  }
}

std::size_t KoszulResolution::index_of(const std::vector<std::size_t>& subset) const {
  const auto& b = basis_.at(subset.size());
  auto it = std::lower_bound(b.begin(), b.end(), subset);
  if (it == b.end() || *it != subset) throw Error(ErrorKind::OutOfRange, "not an increasing subset");
  return static_cast<std::size_t>(it - b.begin());
}

bool KoszulResolution::composition_vanishes() const {
  for (std::size_t j = 2; j <= n_; ++j)
    if (!(d_[j - 1] * d_[j]).is_zero()) return false;
  return true;
}

KoszulResolution koszul(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::OutOfRange, "Koszul resolution needs n >= 1");
  return KoszulResolution(n);
}

FiniteGroupResolution::FiniteGroupResolution(GroupPtr group, std::string kind, std::vector<std::size_t> ranks,
                                             std::vector<std::vector<Chain>> boundary)
    : group_(std::move(group)), kind_(std::move(kind)), ranks_(std::move(ranks)), boundary_(std::move(boundary)) {
  if (ranks_.empty()) throw Error(ErrorKind::Malformed, "resolution without degrees");
  boundary_.resize(ranks_.size());
}

bool FiniteGroupResolution::composition_vanishes() const {
  for (std::size_t i = 2; i <= max_degree(); ++i) {
    for (const Chain& chain : boundary_[i]) {
      std::map<std::pair<std::size_t, std::size_t>, long> acc;
      for (const Term& t : chain)
        for (const Term& u : boundary_[i - 1][t.target])
          acc[{u.target, group_->multiply(t.element, u.element)}] += t.coeff * u.coeff;
      for (const auto& [key, c] : acc)
        if (c != 0) return false;
    }
  }
  return true;
}

bool FiniteGroupResolution::augmentation_exact() const {
  const std::size_t order = group_->order();
  const std::size_t dim0 = ranks_[0] * order;  // P_0 as a free abelian group, basis g * e_b
  // Every term of d_1 must augment to zero.
  if (max_degree() >= 1)
    for (const Chain& chain : boundary_[1]) {
      long s = 0;
      for (const Term& t : chain) s += t.coeff;
      if (s != 0) return false;
    }
  // Z-span of h * d_1(e_a) for all h, a; the cokernel must be Z.
  std::vector<IntMatrix> cols;
  const std::size_t gens = max_degree() >= 1 ? ranks_[1] : 0;
  IntMatrix image(dim0, gens * order);
  for (std::size_t a = 0; a < gens; ++a)
    for (std::size_t h = 0; h < order; ++h)
      for (const Term& t : boundary_[1][a]) image(t.target * order + group_->multiply(h, t.element), a * order + h) += t.coeff;
  // Kernel of the augmentation Z^{dim0} -> Z^{ranks_[0]} ... onto Z only when P_0 has rank one.
  if (ranks_[0] != 1) return false;
  return cokernel_group(image) == FinAbGroup::free(1);
}

FiniteGroupResolution trivial_resolution(const GroupPtr& group, std::size_t max_degree) {
  if (group->order() != 1) throw Error(ErrorKind::Malformed, "trivial resolution needs the trivial group");
  std::vector<std::size_t> ranks(max_degree + 1, 0);
  ranks[0] = 1;
  std::vector<std::vector<FiniteGroupResolution::Chain>> boundary(max_degree + 1);
  return FiniteGroupResolution(group, "trivial", std::move(ranks), std::move(boundary));
}

FiniteGroupResolution periodic_cyclic(const GroupPtr& group, std::size_t max_degree) {
  const std::size_t t = group->cyclic_generator();
  if (t == FiniteMatrixGroup::npos) throw Error(ErrorKind::NotCyclic, group->structure_name() + " is not cyclic");
  if (group->order() == 1) return trivial_resolution(group, max_degree);
  std::vector<std::size_t> ranks(max_degree + 1, 1);
  std::vector<std::vector<FiniteGroupResolution::Chain>> boundary(max_degree + 1);
  for (std::size_t i = 1; i <= max_degree; ++i) {
    FiniteGroupResolution::Chain chain;
    if (i % 2 == 1) {
      chain.push_back({0, t, 1});
      chain.push_back({0, FiniteMatrixGroup::identity(), -1});
    } else {
      for (std::size_t g = 0; g < group->order(); ++g) chain.push_back({0, g, 1});
    }
    boundary[i] = {std::move(chain)};
  }
  return FiniteGroupResolution(group, "periodic", std::move(ranks), std::move(boundary));
}

FiniteGroupResolution tensor_resolutions(const FiniteGroupResolution& r1, const FiniteGroupResolution& r2,
                                         const GroupPtr& product) {
  const auto& g1 = *r1.group();
  const auto& g2 = *r2.group();
  std::vector<std::size_t> map1(g1.order()), map2(g2.order());
  for (std::size_t g = 0; g < g1.order(); ++g) map1[g] = product->find(g1.matrix(g));
  for (std::size_t g = 0; g < g2.order(); ++g) map2[g] = product->find(g2.matrix(g));
  auto missing = [](const std::vector<std::size_t>& m) {
    return std::find(m.begin(), m.end(), FiniteMatrixGroup::npos) != m.end();
  };
  if (missing(map1) || missing(map2)) throw Error(ErrorKind::NotDirectProduct, "factor is not inside the product group");
  if (g1.order() * g2.order() != product->order())
    throw Error(ErrorKind::NotDirectProduct, "orders do not multiply to |G|");
  std::vector<char> hit(product->order(), 0);
  for (std::size_t a : map1)
    for (std::size_t b : map2) {
      if (product->multiply(a, b) != product->multiply(b, a))
        throw Error(ErrorKind::NotDirectProduct, "factors do not commute");
      hit[product->multiply(a, b)] = 1;
    }
  if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(product->order()))
    throw Error(ErrorKind::NotDirectProduct, "factors do not generate the product");

  const std::size_t top = std::min(r1.max_degree(), r2.max_degree());
  // offset[k][i] = first index of the (i, k-i) summand within degree k.
  std::vector<std::vector<std::size_t>> offset(top + 1);
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      offset[k].push_back(ranks[k]);
      ranks[k] += r1.rank(i) * r2.rank(k - i);
    }
  }
  std::vector<std::vector<FiniteGroupResolution::Chain>> boundary(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    boundary[k].resize(ranks[k]);
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t j = k - i;
      for (std::size_t a = 0; a < r1.rank(i); ++a)
        for (std::size_t b = 0; b < r2.rank(j); ++b) {
          auto& chain = boundary[k][offset[k][i] + a * r2.rank(j) + b];
          if (i >= 1)
            for (const auto& t : r1.boundary(i)[a])
              chain.push_back({offset[k - 1][i - 1] + t.target * r2.rank(j) + b, map1[t.element], t.coeff});
          if (j >= 1) {
            const long sign = (i % 2 == 0) ? 1 : -1;
            for (const auto& t : r2.boundary(j)[b])
              chain.push_back({offset[k - 1][i] + a * r2.rank(j - 1) + t.target, map2[t.element], sign * t.coeff});
          }
        }
    }
  }
  return FiniteGroupResolution(product, "tensor(" + r1.kind() + "," + r2.kind() + ")", std::move(ranks),
                               std::move(boundary));
}

FiniteGroupResolution bar_truncated(const GroupPtr& group, std::size_t max_degree, std::size_t coefficient_rank,
                                    std::size_t guard) {
  const std::size_t order = group->order();
  if (order == 1) return trivial_resolution(group, max_degree);
  const std::size_t base = order - 1;  // non-identity elements 1..order-1 -> digits 0..base-1
  std::vector<std::size_t> ranks(max_degree + 1, 1);
  for (std::size_t i = 1; i <= max_degree; ++i) {
    ranks[i] = ranks[i - 1] * base;
    if (ranks[i] * std::max<std::size_t>(coefficient_rank, 1) > guard)
      throw Error(ErrorKind::SizeGuardExceeded, "bar resolution of a group of order " + std::to_string(order) +
                                                    " in degree " + std::to_string(i) + " exceeds the size guard " +
                                                    std::to_string(guard));
  }
  auto decode = [&](std::size_t index, std::size_t len) {
    std::vector<std::size_t> tuple(len);
    for (std::size_t k = len; k-- > 0;) {
      tuple[k] = index % base + 1;
      index /= base;
    }
    return tuple;
  };
  auto encode = [&](const std::vector<std::size_t>& tuple) {
    std::size_t index = 0;
    for (std::size_t g : tuple) index = index * base + (g - 1);
    return index;
  };
  std::vector<std::vector<FiniteGroupResolution::Chain>> boundary(max_degree + 1);
  for (std::size_t i = 1; i <= max_degree; ++i) {
    boundary[i].resize(ranks[i]);
    for (std::size_t a = 0; a < ranks[i]; ++a) {
      const auto tuple = decode(a, i);
      auto& chain = boundary[i][a];
      // g1 [g2|...|gi]
      chain.push_back({encode({tuple.begin() + 1, tuple.end()}), tuple[0], 1});
      for (std::size_t k = 0; k + 1 < i; ++k) {
        const std::size_t merged = group->multiply(tuple[k], tuple[k + 1]);
        if (merged == FiniteMatrixGroup::identity()) continue;
        std::vector<std::size_t> face;
        face.insert(face.end(), tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k));
        face.push_back(merged);
        face.insert(face.end(), tuple.begin() + static_cast<std::ptrdiff_t>(k) + 2, tuple.end());
        chain.push_back({encode(face), FiniteMatrixGroup::identity(), (k % 2 == 0) ? -1L : 1L});
      }
      chain.push_back({encode({tuple.begin(), tuple.end() - 1}), FiniteMatrixGroup::identity(), (i % 2 == 0) ? 1L : -1L});
    }
  }
  return FiniteGroupResolution(group, "bar", std::move(ranks), std::move(boundary));
}

std::vector<Subgroup> cyclic_decomposition(const GroupPtr& group) {
  if (!group->is_abelian()) return {};
  std::vector<Subgroup> factors;
  Subgroup remaining = whole_group(group);
  while (remaining.order() > 1) {
    std::size_t best = remaining.members().front();
    for (std::size_t g : remaining.members())
      if (group->element_order(g) > group->element_order(best)) best = g;
    Subgroup cyclic = subgroup_generated(group, {best});
    std::vector<std::size_t> gens;
    Subgroup complement = subgroup_generated(group, gens);
    for (std::size_t y : remaining.members()) {
      if (complement.contains(y)) continue;
      auto trial = gens;
      trial.push_back(y);
      Subgroup candidate = subgroup_generated(group, trial);
      bool meets = false;
      for (std::size_t c : cyclic.members())
        if (c != FiniteMatrixGroup::identity() && candidate.contains(c)) meets = true;
      if (!meets) {
        gens = std::move(trial);
        complement = std::move(candidate);
      }
    }
    if (complement.order() * cyclic.order() != remaining.order()) return {};
    factors.push_back(std::move(cyclic));
    remaining = std::move(complement);
  }
  return factors;
}

FiniteGroupResolution choose_resolution(const GroupPtr& group, std::size_t max_degree, ResolutionPolicy policy,
                                        std::size_t coefficient_rank, std::size_t guard) {
  if (group->order() == 1) return trivial_resolution(group, max_degree);
  if (policy == ResolutionPolicy::Bar) return bar_truncated(group, max_degree, coefficient_rank, guard);
  if (group->is_cyclic()) return periodic_cyclic(group, max_degree);
  auto factors = cyclic_decomposition(group);
  if (factors.size() >= 2) {
    GroupPtr acc_group = factors[0].as_group();
    FiniteGroupResolution acc = periodic_cyclic(acc_group, max_degree);
    std::vector<std::size_t> acc_members = factors[0].members();
    for (std::size_t k = 1; k < factors.size(); ++k) {
      GroupPtr factor_group = factors[k].as_group();
      FiniteGroupResolution next = periodic_cyclic(factor_group, max_degree);
      std::vector<std::size_t> gens = acc_members;
      gens.insert(gens.end(), factors[k].members().begin(), factors[k].members().end());
      Subgroup joined = subgroup_generated(group, gens);
      GroupPtr joined_group = (k + 1 == factors.size()) ? group : joined.as_group();
      acc = tensor_resolutions(acc, next, joined_group);
      acc_members = joined.members();
    }
    return acc;
  }
  return bar_truncated(group, max_degree, coefficient_rank, guard);
}

std::vector<IntMatrix> hom_cochain_complex(const FiniteGroupResolution& p, const ZGLattice& n, std::size_t top) {
  if (p.group() != n.group() && p.group()->elements() != n.group()->elements())
    throw Error(ErrorKind::GroupMismatch, "resolution and coefficients over different groups");
  if (top + 1 > p.max_degree())
    throw Error(ErrorKind::OutOfRange, "resolution truncated at degree " + std::to_string(p.max_degree()) +
                                           ", need " + std::to_string(top + 1));
  const std::size_t r = n.rank();
  std::vector<IntMatrix> transposed;
  transposed.reserve(n.group()->order());
  for (const auto& a : n.actions()) transposed.push_back(a.transpose());
  std::vector<IntMatrix> out;
  out.reserve(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    IntMatrix delta(p.rank(i + 1) * r, p.rank(i) * r);
    const auto& chains = p.boundary(i + 1);
    for (std::size_t a = 0; a < chains.size(); ++a)
      for (const auto& t : chains[a]) {
        const IntMatrix& m = transposed[t.element];
        for (std::size_t x = 0; x < r; ++x)
          for (std::size_t y = 0; y < r; ++y)
            if (sgn(m(x, y)) != 0) delta(a * r + x, t.target * r + y) += t.coeff * m(x, y);
      }
    out.push_back(std::move(delta));
  }
  return out;
}

}  // namespace orbicoh
