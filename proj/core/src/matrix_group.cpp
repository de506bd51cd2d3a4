#include "orbicoh/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "orbicoh/error.hpp"

namespace orbicoh {

namespace {

// Invariant factors of G/N for a normal subgroup N with abelian quotient, given
// by its membership mask. n_k = log_p #{cosets a : a^(p^k) = 1}; the number of
// cyclic factors of order >= p^k is n_k - n_{k-1}.
FinAbGroup quotient_invariants(const FiniteMatrixGroup& group, const std::vector<char>& in_normal) {
  const std::size_t normal_order = static_cast<std::size_t>(std::count(in_normal.begin(), in_normal.end(), 1));
  const std::size_t quotient_order = group.order() / normal_order;
  std::vector<Integer> cyclic_orders;
  for (long p : prime_divisors(quotient_order)) {
    std::vector<std::size_t> logs{0};
    std::size_t pk = 1;
    for (;;) {
      pk *= static_cast<std::size_t>(p);
      std::size_t count = 0;
      for (std::size_t g = 0; g < group.order(); ++g)
        if (in_normal[group.power(g, static_cast<long>(pk))]) ++count;
      std::size_t cosets = count / normal_order;
      std::size_t lg = 0;
      while (cosets > 1) {
        cosets /= static_cast<std::size_t>(p);
        ++lg;
      }
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    for (std::size_t k = 1; k < logs.size(); ++k) {
      std::size_t at_least_k = logs[k] - logs[k - 1];
      std::size_t at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      Integer pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), k);
      for (std::size_t i = 0; i < at_least_k - at_least_next; ++i) cyclic_orders.push_back(pe);
    }
  }
  return FinAbGroup(0, cyclic_orders);
}

}  // namespace

GroupPtr FiniteMatrixGroup::enumerate(std::size_t n, const std::vector<IntMatrix>& generators, std::size_t bound) {
  auto group = std::shared_ptr<FiniteMatrixGroup>(new FiniteMatrixGroup());
  group->n_ = n;
  group->generators_ = generators;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const IntMatrix& g = generators[i];
    if (g.rows() != n || g.cols() != n)
      throw Error(ErrorKind::NotUnimodular, "generator " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                                                std::to_string(n));
    Integer det = g.determinant();
    if (det != 1 && det != -1)
      throw Error(ErrorKind::NotUnimodular, "generator " + std::to_string(i) + " = " + g.to_string() + " has det " +
                                                det.get_str());
  }

  auto& elements = group->elements_;
  auto& index = group->index_;
  elements.push_back(IntMatrix::identity(n));
  index.emplace(elements.back(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const IntMatrix& s : generators) {
      // element * s  has matrix  A_s * A_element
      IntMatrix next = s * elements[head];
      if (index.count(next)) continue;
      if (elements.size() >= bound)
        throw Error(ErrorKind::BoundExceeded,
                    "group generated by the given matrices has more than " + std::to_string(bound) + " elements");
      index.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }

  const std::size_t order = elements.size();
  group->table_.resize(order * order);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      auto it = index.find(elements[h] * elements[g]);
      if (it == index.end()) throw Error(ErrorKind::BoundExceeded, "element table not closed");
      group->table_[g * order + h] = it->second;
    }
  group->inverse_.resize(order);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h)
      if (group->table_[g * order + h] == 0) {
        group->inverse_[g] = h;
        break;
      }
  group->orders_.resize(order);
  for (std::size_t g = 0; g < order; ++g) {
    std::size_t k = 1, x = g;
    while (x != 0) {
      x = group->table_[x * order + g];
      ++k;
    }
    group->orders_[g] = k;
  }
  for (const IntMatrix& s : generators) group->generator_indices_.push_back(index.at(s));
  return group;
}

std::size_t FiniteMatrixGroup::power(std::size_t g, long k) const {
  if (k < 0) return power(inverse(g), -k);
  std::size_t x = identity();
  for (long i = 0; i < k; ++i) x = multiply(x, g);
  return x;
}

std::size_t FiniteMatrixGroup::conjugate(std::size_t g, std::size_t by) const {
  return multiply(multiply(by, g), inverse(by));
}

std::size_t FiniteMatrixGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? npos : it->second;
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t g = 0; g < order(); ++g)
    for (std::size_t h = g + 1; h < order(); ++h)
      if (multiply(g, h) != multiply(h, g)) return false;
  return true;
}

std::size_t FiniteMatrixGroup::cyclic_generator() const {
  for (std::size_t g = 0; g < order(); ++g)
    if (orders_[g] == order()) return g;
  return npos;
}

std::string FiniteMatrixGroup::structure_name() const {
  const std::size_t n = order();
  if (n == 1) return "1";
  if (is_cyclic()) return "Z/" + std::to_string(n);
  if (is_abelian()) {
    std::vector<char> trivial(order(), 0);
    trivial[identity()] = 1;
    return quotient_invariants(*this, trivial).to_string();
  }
  std::size_t involutions = static_cast<std::size_t>(std::count(orders_.begin(), orders_.end(), std::size_t{2}));
  if (n == 8) return involutions == 5 ? "D8" : "Q8";
  if (n == 6) return "S3";
  return "order-" + std::to_string(n) + " group";
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(std::size_t g) const { return std::binary_search(members_.begin(), members_.end(), g); }

GroupPtr Subgroup::as_group() const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{FiniteMatrixGroup::identity()};
  for (std::size_t g : members_) {
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    gens.push_back(g);
    span = subgroup_generated(parent_, gens).members();
  }
  std::vector<IntMatrix> mats;
  for (std::size_t g : gens) mats.push_back(parent_->matrix(g));
  return FiniteMatrixGroup::enumerate(parent_->dimension(), mats, parent_->order() + 1);
}

std::vector<std::size_t> Subgroup::parent_indices(const FiniteMatrixGroup& sub) const {
  std::vector<std::size_t> out(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i) out[i] = parent_->find(sub.matrix(i));
  return out;
}

Subgroup subgroup_generated(const GroupPtr& group, const std::vector<std::size_t>& elements) {
  std::vector<char> in(group->order(), 0);
  std::vector<std::size_t> members{FiniteMatrixGroup::identity()};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t s : elements) {
      std::size_t next = group->multiply(members[head], s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

Subgroup whole_group(const GroupPtr& group) {
  std::vector<std::size_t> all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

std::vector<long> prime_divisors(std::size_t n) {
  std::vector<long> out;
  for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(n)))) out.push_back(p.get_si());
  return out;
}

Subgroup sylow_subgroup(const GroupPtr& group, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::size_t target = 1;
  {
    std::size_t n = group->order();
    while (n % static_cast<std::size_t>(p) == 0) {
      n /= static_cast<std::size_t>(p);
      target *= static_cast<std::size_t>(p);
    }
  }
  auto is_p_power = [p](std::size_t k) {
    while (k % static_cast<std::size_t>(p) == 0) k /= static_cast<std::size_t>(p);
    return k == 1;
  };
  std::vector<std::size_t> gens;
  Subgroup current = subgroup_generated(group, gens);
  while (current.order() < target) {
    bool grew = false;
    for (std::size_t g = 0; g < group->order() && !grew; ++g) {
      if (current.contains(g) || !is_p_power(group->element_order(g))) continue;
      auto trial = gens;
      trial.push_back(g);
      Subgroup candidate = subgroup_generated(group, trial);
      if (is_p_power(candidate.order())) {
        gens = std::move(trial);
        current = std::move(candidate);
        grew = true;
      }
    }
    if (!grew) throw Error(ErrorKind::Inconsistent, "Sylow search stalled");
  }
  return current;
}

Subgroup conjugate_subgroup(const Subgroup& q, std::size_t by) {
  std::vector<std::size_t> members;
  for (std::size_t g : q.members()) members.push_back(q.parent()->conjugate(g, by));
  return Subgroup(q.parent(), std::move(members));
}

Subgroup normalizer(const Subgroup& q) {
  std::vector<std::size_t> members;
  for (std::size_t g = 0; g < q.parent()->order(); ++g)
    if (conjugate_subgroup(q, g) == q) members.push_back(g);
  return Subgroup(q.parent(), std::move(members));
}

Subgroup commutator_subgroup(const GroupPtr& group) {
  std::vector<std::size_t> commutators;
  for (std::size_t g = 0; g < group->order(); ++g)
    for (std::size_t h = 0; h < group->order(); ++h) {
      std::size_t c = group->multiply(group->multiply(g, h), group->multiply(group->inverse(g), group->inverse(h)));
      commutators.push_back(c);
    }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return subgroup_generated(group, commutators);
}

std::vector<Subgroup> order_p_subgroup_class_representatives(const GroupPtr& group, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::vector<Subgroup> reps;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t g = 0; g < group->order(); ++g) {
    if (group->element_order(g) != static_cast<std::size_t>(p)) continue;
    Subgroup q = subgroup_generated(group, {g});
    if (seen.count(q.members())) continue;
    for (std::size_t by = 0; by < group->order(); ++by) seen.insert(conjugate_subgroup(q, by).members());
    reps.push_back(std::move(q));
  }
  return reps;
}

FinAbGroup group_abelianization(const GroupPtr& group) {
  Subgroup derived = commutator_subgroup(group);
  std::vector<char> in_derived(group->order(), 0);
  for (std::size_t g : derived.members()) in_derived[g] = 1;
  return quotient_invariants(*group, in_derived);
}

std::size_t element_order(const FiniteMatrixGroup& group, std::size_t g) { return group.element_order(g); }

}  // namespace orbicoh
