#include "orbicoh/cohomology.hpp"

#include <algorithm>
#include <map>

#include "orbicoh/error.hpp"
#include "orbicoh/smith.hpp"

namespace orbicoh {

std::vector<FinAbGroup> group_cohomology(const FiniteGroupResolution& p, const ZGLattice& n, std::size_t top) {
  return cochain_cohomology(hom_cochain_complex(p, n, top));
}

std::vector<FinAbGroup> group_cohomology_range(const ZGLattice& n, std::size_t top, ResolutionPolicy policy,
                                               std::size_t guard) {
  FiniteGroupResolution p = choose_resolution(n.group(), top + 1, policy, n.rank(), guard);
  return group_cohomology(p, n, top);
}

FinAbGroup group_cohomology(const ZGLattice& n, std::size_t i, ResolutionPolicy policy) {
  return group_cohomology_range(n, i, policy).back();
}

E2Result e2_assembly(const ZGLattice& m, std::size_t max_degree, bool force, ResolutionPolicy policy,
                     std::size_t guard) {
  E2Result out;
  E2Page& page = out.page;
  page.max_degree = max_degree;
  page.rank = m.rank();
  page.forced = force;
  page.hypothesis_holds = block_decomposition_in_basis(m).hypothesis_holds;
  if (!page.hypothesis_holds && !force)
    throw Error(ErrorKind::HypothesisUnverified,
                "a Sylow restriction has a coordinate block of rank > 2; collapse is not guaranteed (use --force)");
  const ZGLattice dual_m = dual(m);
  std::size_t widest = 1;
  for (std::size_t j = 0; j <= m.rank() && j <= max_degree; ++j) {
    std::size_t c = index_subsets(m.rank(), j).size();
    widest = std::max(widest, c);
  }
  FiniteGroupResolution p = choose_resolution(m.group(), max_degree + 1, policy, widest, guard);
  page.resolution = p.kind();
  page.cells.resize(m.rank() + 1);
  for (std::size_t j = 0; j <= m.rank() && j <= max_degree; ++j)
    page.cells[j] = group_cohomology(p, exterior_power(dual_m, j), max_degree - j);
  out.totals.assign(max_degree + 1, FinAbGroup());
  for (std::size_t j = 0; j < page.cells.size(); ++j)
    for (std::size_t i = 0; i < page.cells[j].size(); ++i) out.totals[i + j] += page.cells[j][i];
  return out;
}

namespace {

struct Cell {
  std::size_t i, a, j, s;
};

// Basis of the total complex in each degree 0..top, plus a lookup (i,a,j,s) -> index.
struct TotalBasis {
  std::vector<std::vector<Cell>> cells;
  std::vector<std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t>> index;
};

TotalBasis total_basis(const KoszulResolution& k, const FiniteGroupResolution& p, std::size_t top) {
  TotalBasis b;
  b.cells.resize(top + 1);
  b.index.resize(top + 1);
  for (std::size_t deg = 0; deg <= top; ++deg)
    for (std::size_t i = 0; i <= deg; ++i) {
      const std::size_t j = deg - i;
      if (j > k.rank() || i > p.max_degree()) continue;
      for (std::size_t a = 0; a < p.rank(i); ++a)
        for (std::size_t s = 0; s < k.degree_rank(j); ++s) {
          b.index[deg][{i, a, j, s}] = b.cells[deg].size();
          b.cells[deg].push_back({i, a, j, s});
        }
    }
  return b;
}

void require_certified(const CompatibleAction& action, const FiniteGroupResolution& p) {
  if (p.group() != action.group() && p.group()->elements() != action.group()->elements())
    throw Error(ErrorKind::GroupMismatch, "resolution and action over different groups");
  Certificate cert = verify(action);
  if (!cert.verified) {
    std::string why = cert.witnesses.empty() ? "" : " (" + cert.witnesses.front().condition + ")";
    throw Error(ErrorKind::UncertifiedAction, "compatible action failed certification" + why);
  }
}

}  // namespace

TotalComplex total_complex(const CompatibleAction& action, const FiniteGroupResolution& p, std::size_t top) {
  require_certified(action, p);
  if (p.max_degree() < top + 1)
    throw Error(ErrorKind::OutOfRange, "resolution stops at degree " + std::to_string(p.max_degree()));
  const KoszulResolution& k = *action.koszul;
  const auto& group = *action.group();
  const std::size_t n = k.rank();
  // aug_t[g][j] = augment(T_{g^-1}[j]); aug_d[j] = augment(D_j).
  std::vector<std::vector<IntMatrix>> aug_t(group.order());
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t j = 0; j <= n; ++j) aug_t[g].push_back(action.T[group.inverse(g)][j].augmented());
  std::vector<IntMatrix> aug_d(n + 1);
  for (std::size_t j = 1; j <= n; ++j) aug_d[j] = k.differential(j).augmented();

  TotalBasis basis = total_basis(k, p, top + 1);
  TotalComplex out;
  for (std::size_t deg = 0; deg <= top + 1; ++deg) out.ranks.push_back(basis.cells[deg].size());
  for (std::size_t deg = 0; deg <= top; ++deg) {
    IntMatrix delta(out.ranks[deg + 1], out.ranks[deg]);
    for (std::size_t row = 0; row < basis.cells[deg + 1].size(); ++row) {
      const Cell& c = basis.cells[deg + 1][row];
      if (c.i >= 1)
        for (const auto& t : p.boundary(c.i)[c.a]) {
          const IntMatrix& m = aug_t[t.element][c.j];
          for (std::size_t r = 0; r < m.rows(); ++r) {
            if (sgn(m(r, c.s)) == 0) continue;
            delta(row, basis.index[deg].at({c.i - 1, t.target, c.j, r})) += t.coeff * m(r, c.s);
          }
        }
      if (c.j >= 1) {
        const IntMatrix& d = aug_d[c.j];
        for (std::size_t r = 0; r < d.rows(); ++r) {
          if (sgn(d(r, c.s)) == 0) continue;
          Integer v = d(r, c.s);
          if (c.i % 2 == 1) v = -v;
          delta(row, basis.index[deg].at({c.i, c.a, c.j - 1, r})) += v;
        }
      }
    }
    out.coboundaries.push_back(std::move(delta));
  }
  return out;
}

std::vector<FinAbGroup> total_complex_cohomology(const CompatibleAction& action, const FiniteGroupResolution& p,
                                                 std::size_t top) {
  return cochain_cohomology(total_complex(action, p, top).coboundaries);
}

std::vector<std::size_t> mod_p_cohomology(const CompatibleAction& action, const FiniteGroupResolution& p,
                                          std::size_t top, long prime) {
  if (!is_prime(prime)) throw Error(ErrorKind::NotPrime, std::to_string(prime) + " is not prime");
  TotalComplex tc = total_complex(action, p, top);
  std::vector<std::size_t> ranks;
  for (const auto& d : tc.coboundaries) ranks.push_back(rank_mod_p(d, prime));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= top; ++k) out.push_back(tc.ranks[k] - ranks[k] - (k ? ranks[k - 1] : 0));
  return out;
}

namespace {

// Element of Z[Gamma]: group element -> Laurent coefficient, i.e. sum m_g g.
using GammaElem = std::map<std::size_t, LaurentPoly>;
using GammaChain = std::map<std::size_t, GammaElem>;  // basis index -> coefficient

void add_into(GammaElem& acc, std::size_t g, const LaurentPoly& m) {
  auto it = acc.find(g);
  if (it == acc.end()) {
    if (!m.is_zero()) acc.emplace(g, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

bool total_composition_vanishes(const CompatibleAction& action, const FiniteGroupResolution& p, std::size_t top) {
  require_certified(action, p);
  const KoszulResolution& k = *action.koszul;
  const auto& group = *action.group();
  const std::size_t n = k.rank();
  const std::size_t last = std::min(top + 1, p.max_degree() + n);
  TotalBasis basis = total_basis(k, p, last);
  // d of a basis cell as a chain in the degree below.
  auto boundary = [&](std::size_t deg, const Cell& c) {
    GammaChain out;
    if (c.i >= 1)
      for (const auto& t : p.boundary(c.i)[c.a]) {
        const LaurentMatrix& tm = action.T[group.inverse(t.element)][c.j];
        for (std::size_t r = 0; r < tm.rows(); ++r) {
          if (tm(r, c.s).is_zero()) continue;
          LaurentPoly coef = action.sigma[t.element].apply(tm(r, c.s)).scaled(t.coeff);
          add_into(out[basis.index[deg - 1].at({c.i - 1, t.target, c.j, r})], t.element, coef);
        }
      }
    if (c.j >= 1) {
      const LaurentMatrix& d = k.differential(c.j);
      for (std::size_t r = 0; r < d.rows(); ++r) {
        if (d(r, c.s).is_zero()) continue;
        LaurentPoly coef = (c.i % 2 == 1) ? -d(r, c.s) : d(r, c.s);
        add_into(out[basis.index[deg - 1].at({c.i, c.a, c.j - 1, r})], FiniteMatrixGroup::identity(), coef);
      }
    }
    return out;
  };
  for (std::size_t deg = 2; deg <= last; ++deg) {
    for (const Cell& c : basis.cells[deg]) {
      GammaChain first = boundary(deg, c);
      GammaChain second;
      for (const auto& [x, lambda] : first) {
        GammaChain dx = boundary(deg - 1, basis.cells[deg - 1][x]);
        for (const auto& [y, mu] : dx)
          for (const auto& [g, m] : lambda)
            for (const auto& [h, m2] : mu)  // (m g)(m2 h) = m sigma_g(m2) (gh)
              add_into(second[y], group.multiply(g, h), m * action.sigma[g].apply(m2));
      }
      for (const auto& [y, e] : second)
        if (!e.empty()) return false;
    }
  }
  return true;
}

CollapseReport collapse_verify(const ZGLattice& m, std::size_t max_degree, ActionSource source, bool force) {
  CollapseReport report;
  E2Result e2 = e2_assembly(m, max_degree, force);
  report.page = e2.page;
  CompatibleAction action = build_action(m, source);
  report.certificate = verify(action);
  report.action_source = action.source;
  FiniteGroupResolution p = choose_resolution(m.group(), max_degree + 1);
  report.resolution = p.kind();
  std::vector<FinAbGroup> total = total_complex_cohomology(action, p, max_degree);
  report.all_agree = true;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    CollapseRow row{k, e2.totals[k], total[k], e2.totals[k] == total[k]};
    report.all_agree = report.all_agree && row.agree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::size_t uct_mod_p_dimension(const FinAbGroup& hk, const FinAbGroup& hk1, long prime) {
  return hk.free_rank() + hk.p_rank(prime) + hk1.p_rank(prime);
}

}  // namespace orbicoh
