#include "orbicoh/compatible_action.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "orbicoh/error.hpp"

namespace orbicoh {

namespace {

using Terms = std::vector<std::pair<std::vector<long>, long>>;

LaurentPoly poly(std::size_t rank, const Terms& terms) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& [e, c] : terms) out.emplace_back(Monomial{e}, Integer(c));
  return LaurentPoly::from_terms(rank, std::move(out));
}

LaurentMatrix lmat(std::size_t rank, std::size_t size, const std::vector<std::vector<Terms>>& rows) {
  LaurentMatrix m(size, size, rank);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = poly(rank, rows[r][c]);
  return m;
}

std::vector<std::string> residual_entries(const LaurentMatrix& diff) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < diff.rows() && out.size() < 4; ++r)
    for (std::size_t c = 0; c < diff.cols() && out.size() < 4; ++c)
      if (!diff(r, c).is_zero())
        out.push_back("(" + std::to_string(r) + "," + std::to_string(c) + "): " + diff(r, c).to_string());
  return out;
}

void record(Certificate& cert, const std::string& condition, std::size_t degree, std::size_t g, std::size_t h,
            const LaurentMatrix& diff) {
  if (cert.witnesses.size() >= 8) return;
  cert.witnesses.push_back({condition, degree, g, h, residual_entries(diff)});
}

std::vector<LaurentMatrix> identity_degrees(const KoszulResolution& k) {
  std::vector<LaurentMatrix> out;
  for (std::size_t j = 0; j <= k.rank(); ++j) out.push_back(LaurentMatrix::identity(k.degree_rank(j), k.rank()));
  return out;
}

LaurentPoly embed(const LaurentPoly& f, std::size_t rank, const std::vector<std::size_t>& coords) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) {
    Monomial g{std::vector<long>(rank, 0)};
    for (std::size_t i = 0; i < coords.size(); ++i) g.exps[coords[i]] = m.exps[i];
    terms.emplace_back(std::move(g), c);
  }
  return LaurentPoly::from_terms(rank, std::move(terms));
}

std::set<IntMatrix> image_set(const ZGLattice& m) { return {m.actions().begin(), m.actions().end()}; }

}  // namespace

Certificate verify(const CompatibleAction& action) {
  Certificate cert;
  const auto& group = *action.group();
  const auto& k = *action.koszul;
  const std::size_t n = k.rank();
  cert.identity = cert.degree_zero = cert.chain_map = cert.cocycle = cert.coefficients = true;
  if (action.T.size() != group.order()) {
    cert.identity = false;
    cert.witnesses.push_back({"shape", 0, 0, 0, {"expected one matrix family per element"}});
    return cert;
  }
  for (std::size_t j = 0; j <= n; ++j) {
    const auto& t = action.T[FiniteMatrixGroup::identity()][j];
    if (!t.is_identity()) {
      cert.identity = false;
      record(cert, "identity", j, 0, 0, t - LaurentMatrix::identity(t.rows(), n));
    }
  }
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto& t0 = action.T[g][0];
    if (!t0.is_identity()) {
      cert.degree_zero = false;
      record(cert, "degree_zero", 0, g, g, t0 - LaurentMatrix::identity(1, n));
    }
    for (std::size_t j = 1; j <= n; ++j) {
      const LaurentMatrix& d = k.differential(j);
      LaurentMatrix lhs = action.T[g][j - 1] * d.twisted(action.sigma[g]);
      LaurentMatrix rhs = d * action.T[g][j];
      if (lhs != rhs) {
        cert.chain_map = false;
        record(cert, "chain_map", j, g, g, lhs - rhs);
      }
    }
  }
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t h = 0; h < group.order(); ++h) {
      const std::size_t gh = group.multiply(g, h);
      for (std::size_t j = 0; j <= n; ++j) {
        LaurentMatrix rhs = action.T[g][j] * action.T[h][j].twisted(action.sigma[g]);
        if (action.T[gh][j] != rhs) {
          cert.cocycle = false;
          record(cert, "cocycle", j, g, h, action.T[gh][j] - rhs);
        }
      }
    }
  const ZGLattice dual_m = dual(action.lattice);
  for (std::size_t j = 0; j <= n; ++j) {
    const ZGLattice ext = exterior_power(dual_m, j);
    for (std::size_t g = 0; g < group.order(); ++g) {
      IntMatrix aug = action.T[group.inverse(g)][j].augmented();
      if (aug != ext.action(g)) {
        cert.coefficients = false;
        record(cert, "coefficients", j, g, g,
               LaurentMatrix::from_integers(aug, n) - LaurentMatrix::from_integers(ext.action(g), n));
      }
    }
  }
  cert.verified = cert.identity && cert.degree_zero && cert.chain_map && cert.cocycle && cert.coefficients;
  return cert;
}

CompatibleAction extend_from_generators(const ZGLattice& lattice, const std::vector<std::vector<LaurentMatrix>>& gen_T,
                                        std::string source) {
  const auto& group = *lattice.group();
  const auto& gens = group.generator_indices();
  if (gen_T.size() != gens.size()) throw Error(ErrorKind::Malformed, "need chain maps for every generator");
  CompatibleAction out;
  out.lattice = lattice;
  out.koszul = std::make_shared<KoszulResolution>(lattice.rank());
  out.source = std::move(source);
  for (std::size_t g = 0; g < group.order(); ++g) out.sigma.emplace_back(lattice.action(g));
  out.T.assign(group.order(), {});
  out.T[FiniteMatrixGroup::identity()] = identity_degrees(*out.koszul);
  std::vector<char> known(group.order(), 0);
  known[FiniteMatrixGroup::identity()] = 1;
  std::vector<std::size_t> queue{FiniteMatrixGroup::identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t g = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t next = group.multiply(g, gens[s]);
      if (known[next]) continue;
      std::vector<LaurentMatrix> t;
      for (std::size_t j = 0; j <= lattice.rank(); ++j) t.push_back(out.T[g][j] * gen_T[s][j].twisted(out.sigma[g]));
      out.T[next] = std::move(t);
      known[next] = 1;
      queue.push_back(next);
    }
  }
  return out;
}

std::string to_string(CatalogCase c) {
  switch (c) {
    case CatalogCase::Trivial: return "trivial";
    case CatalogCase::Sign: return "sign";
    case CatalogCase::Swap: return "swap";
    case CatalogCase::Z3: return "Z/3";
    case CatalogCase::Z4: return "Z/4";
    case CatalogCase::Klein: return "(Z/2)^2";
    case CatalogCase::D8a: return "D8a";
    case CatalogCase::D8b: return "D8b";
  }
  return "?";
}

namespace {

const IntMatrix kSwap{{0, 1}, {1, 0}};
const IntMatrix kRot{{0, 1}, {-1, 0}};
const IntMatrix kZ3{{0, -1}, {1, -1}};

// Degree 0..2 chain maps for the rank-2 generators.
std::vector<LaurentMatrix> swap_maps() {
  return {LaurentMatrix::identity(1, 2), lmat(2, 2, {{{}, {{{0, 0}, 1}}}, {{{{0, 0}, 1}}, {}}}),
          lmat(2, 1, {{{{{0, 0}, -1}}}})};
}
std::vector<LaurentMatrix> rot_maps() {
  return {LaurentMatrix::identity(1, 2), lmat(2, 2, {{{}, {{{-1, 0}, -1}}}, {{{{0, 0}, 1}}, {}}}),
          lmat(2, 1, {{{{{-1, 0}, 1}}}})};
}
std::vector<LaurentMatrix> z3_maps() {
  return {LaurentMatrix::identity(1, 2),
          lmat(2, 2, {{{}, {{{0, 0}, 1}}}, {{{{0, -1}, -1}}, {{{1, -1}, -1}}}}),
          lmat(2, 1, {{{{{0, -1}, 1}}}})};
}
std::vector<LaurentMatrix> minus_identity_maps() {
  return {LaurentMatrix::identity(1, 2), lmat(2, 2, {{{{{-1, 0}, -1}}, {}}, {{}, {{{0, -1}, -1}}}}),
          lmat(2, 1, {{{{{-1, -1}, 1}}}})};
}
std::vector<LaurentMatrix> reflection_maps() {
  return {LaurentMatrix::identity(1, 2), lmat(2, 2, {{{{{0, 0}, 1}}, {}}, {{}, {{{0, -1}, -1}}}}),
          lmat(2, 1, {{{{{0, -1}, -1}}}})};
}

}  // namespace

std::vector<IntMatrix> catalog_generators(CatalogCase c) {
  switch (c) {
    case CatalogCase::Trivial: return {};
    case CatalogCase::Sign: return {IntMatrix{{-1}}};
    case CatalogCase::Swap: return {kSwap};
    case CatalogCase::Z3: return {kZ3};
    case CatalogCase::Z4: return {kRot};
    case CatalogCase::Klein: return {kSwap, IntMatrix{{-1, 0}, {0, -1}}};
    case CatalogCase::D8a: return {kRot, IntMatrix{{1, 0}, {0, -1}}};
    case CatalogCase::D8b: return {kRot, kSwap};
  }
  return {};
}

CompatibleAction catalog_action(CatalogCase c) {
  const std::size_t rank = (c == CatalogCase::Trivial || c == CatalogCase::Sign) ? 1 : 2;
  GroupPtr group = FiniteMatrixGroup::enumerate(rank, catalog_generators(c));
  ZGLattice lattice = ZGLattice::defining(group);
  std::vector<std::vector<LaurentMatrix>> gen_T;
  switch (c) {
    case CatalogCase::Trivial: break;
    case CatalogCase::Sign:
      gen_T.push_back({LaurentMatrix::identity(1, 1), lmat(1, 1, {{{{{-1}, -1}}}})});
      break;
    case CatalogCase::Swap: gen_T = {swap_maps()}; break;
    case CatalogCase::Z3: gen_T = {z3_maps()}; break;
    case CatalogCase::Z4: gen_T = {rot_maps()}; break;
    case CatalogCase::Klein: gen_T = {swap_maps(), minus_identity_maps()}; break;
    case CatalogCase::D8a: gen_T = {rot_maps(), reflection_maps()}; break;
    case CatalogCase::D8b: gen_T = {rot_maps(), swap_maps()}; break;
  }
  CompatibleAction action = extend_from_generators(lattice, gen_T, "catalog:" + to_string(c));
  if (!verify(action).verified)
    throw Error(ErrorKind::UncertifiedAction, "catalog action " + to_string(c) + " failed certification");
  return action;
}

CompatibleAction catalog_action(const ZGLattice& block) {
  static const CatalogCase kCases[] = {CatalogCase::Trivial, CatalogCase::Sign, CatalogCase::Swap,
                                       CatalogCase::Z3,      CatalogCase::Z4,   CatalogCase::Klein,
                                       CatalogCase::D8a,     CatalogCase::D8b};
  const auto image = image_set(block);
  for (CatalogCase c : kCases) {
    const std::size_t rank = (c == CatalogCase::Trivial || c == CatalogCase::Sign) ? 1 : 2;
    if (rank != block.rank()) continue;
    GroupPtr group = FiniteMatrixGroup::enumerate(rank, catalog_generators(c));
    if (std::set<IntMatrix>(group->elements().begin(), group->elements().end()) != image) continue;
    CompatibleAction base = catalog_action(c);
    std::vector<std::size_t> pi(block.group()->order());
    for (std::size_t g = 0; g < pi.size(); ++g) pi[g] = base.group()->find(block.action(g));
    return pullback(base, block, pi);
  }
  std::string desc;
  for (const auto& m : image) desc += (desc.empty() ? "" : ", ") + m.to_string();
  throw Error(ErrorKind::NotInCatalog, "no catalog case has image {" + desc + "}");
}

CompatibleAction pullback(const CompatibleAction& action, const ZGLattice& target, const std::vector<std::size_t>& pi) {
  const auto& g2 = *target.group();
  const auto& g1 = *action.group();
  if (pi.size() != g2.order()) throw Error(ErrorKind::NotHomomorphism, "map must be defined on every element");
  for (std::size_t g = 0; g < g2.order(); ++g) {
    if (pi[g] >= g1.order()) throw Error(ErrorKind::NotHomomorphism, "element " + std::to_string(g) + " has no image");
    if (target.action(g) != action.lattice.action(pi[g]))
      throw Error(ErrorKind::NotHomomorphism, "target action differs from the pulled-back action at element " +
                                                  std::to_string(g));
  }
  for (std::size_t g = 0; g < g2.order(); ++g)
    for (std::size_t h = 0; h < g2.order(); ++h)
      if (pi[g2.multiply(g, h)] != g1.multiply(pi[g], pi[h]))
        throw Error(ErrorKind::NotHomomorphism, "map does not respect products");
  CompatibleAction out;
  out.lattice = target;
  out.koszul = action.koszul;
  out.source = action.source;
  for (std::size_t g = 0; g < g2.order(); ++g) {
    out.sigma.push_back(action.sigma[pi[g]]);
    out.T.push_back(action.T[pi[g]]);
  }
  return out;
}

CompatibleAction solve_rank2(const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "solver needs a 2x2 matrix");
  GroupPtr group = FiniteMatrixGroup::enumerate(2, {a});
  ZGLattice lattice = ZGLattice::defining(group);
  auto e = [&](std::size_t r, std::size_t c) { return a(r, c).get_si(); };
  const LaurentPoly one = LaurentPoly::constant(2, 1);
  const LaurentPoly sx1 = LaurentPoly::monomial(2, {e(0, 0), e(0, 1)});
  const LaurentPoly sx2 = LaurentPoly::monomial(2, {e(1, 0), e(1, 1)});
  const LaurentPoly r10 = geometric_sum(2, 0, e(0, 0));
  const LaurentPoly r01 = LaurentPoly::monomial(2, {e(0, 0), 0}) * geometric_sum(2, 1, e(0, 1));
  const LaurentPoly q10 = geometric_sum(2, 0, e(1, 0));
  const LaurentPoly q01 = LaurentPoly::monomial(2, {e(1, 0), 0}) * geometric_sum(2, 1, e(1, 1));
  const LaurentPoly u1 = LaurentPoly::one_minus_x(2, 0);
  const LaurentPoly u2 = LaurentPoly::one_minus_x(2, 1);

  // Homogeneous corrections: 0, then +-h over monomials with exponents in [-2, 2].
  std::vector<LaurentPoly> hs{LaurentPoly(2)};
  for (long a1 = -2; a1 <= 2; ++a1)
    for (long a2 = -2; a2 <= 2; ++a2)
      for (long sign : {1L, -1L}) hs.push_back(LaurentPoly::monomial(2, {a1, a2}, sign));

  bool any_chain_map = false;
  std::optional<CompatibleAction> last;
  auto attempt = [&](const LaurentPoly& hq, const LaurentPoly& hr) -> bool {
    LaurentPoly Q01 = q01 + hq * u1, Q10 = q10 - hq * u2;
    LaurentPoly R01 = r01 + hr * u1, R10 = r10 - hr * u2;
    Division div = divide_by_1_minus_x(Q01 * (one - sx1) - R01 * (one - sx2), 0);
    if (!div.exact) return false;
    const LaurentPoly& q11 = div.quotient;
    if (-(q11 * u2) != Q10 * (one - sx1) - R10 * (one - sx2)) return false;
    any_chain_map = true;
    LaurentMatrix t1(2, 2, 2);
    t1(0, 0) = R10;
    t1(0, 1) = Q10;
    t1(1, 0) = R01;
    t1(1, 1) = Q01;
    LaurentMatrix t2(1, 1, 2);
    t2(0, 0) = q11;
    std::vector<std::vector<LaurentMatrix>> gen_T(group->generator_indices().size(),
                                                  {LaurentMatrix::identity(1, 2), t1, t2});
    CompatibleAction action = extend_from_generators(lattice, gen_T, "solver");
    // Cheap order test T_{t^(m-1)} sigma(T_t) = I before the all-pairs check.
    const std::size_t t = group->generator_indices().front();
    const std::size_t before = group->inverse(t);
    for (std::size_t j = 1; j <= 2; ++j)
      if (!(action.T[before][j] * action.T[t][j].twisted(action.sigma[before])).is_identity()) return false;
    bool ok = verify(action).verified;
    last = std::move(action);
    return ok;
  };
  for (const auto& hq : hs)
    if (attempt(hq, LaurentPoly(2))) return *last;
  for (const auto& hr : hs)
    if (attempt(LaurentPoly(2), hr)) return *last;
  for (const auto& hq : hs)
    for (const auto& hr : hs)
      if (!hq.is_zero() && !hr.is_zero() && attempt(hq, hr)) return *last;
  if (!any_chain_map)
    throw Error(ErrorKind::Inconsistent, "the two degree-2 equations have no common solution for " + a.to_string());
  throw Error(ErrorKind::OrderConditionFailed,
              "chain maps exist for " + a.to_string() + " but none searched satisfies the order condition");
}

CompatibleAction assemble_direct_sum(const ZGLattice& whole, const std::vector<std::vector<std::size_t>>& blocks,
                                     const std::vector<CompatibleAction>& parts) {
  if (blocks.size() != parts.size()) throw Error(ErrorKind::Malformed, "one action per block");
  const std::size_t n = whole.rank();
  std::vector<long> block_of(n, -1), local_of(n, -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (parts[k].group() != whole.group()) throw Error(ErrorKind::GroupMismatch, "block action over another group");
    if (parts[k].rank() != blocks[k].size()) throw Error(ErrorKind::DimensionMismatch, "block size differs from action rank");
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      const std::size_t c = blocks[k][i];
      if (c >= n || block_of[c] != -1) throw Error(ErrorKind::Malformed, "blocks must partition the coordinates");
      block_of[c] = static_cast<long>(k);
      local_of[c] = static_cast<long>(i);
    }
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0) throw Error(ErrorKind::Malformed, "blocks miss coordinates");

  auto koszul = std::make_shared<KoszulResolution>(n);
  struct Split {
    std::vector<std::size_t> degree;  // per block
    std::vector<std::size_t> index;   // per block, inside that block's basis
    long sign = 1;
  };
  std::vector<std::vector<Split>> split(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    for (const auto& subset : koszul->basis(j)) {
      Split s;
      std::vector<std::vector<std::size_t>> local(blocks.size());
      for (std::size_t c : subset) local[block_of[c]].push_back(static_cast<std::size_t>(local_of[c]));
      std::vector<std::size_t> concat;
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        s.degree.push_back(local[k].size());
        s.index.push_back(parts[k].koszul->index_of(local[k]));
        for (std::size_t i : local[k]) concat.push_back(blocks[k][i]);
      }
      std::size_t inversions = 0;
      for (std::size_t x = 0; x < concat.size(); ++x)
        for (std::size_t y = x + 1; y < concat.size(); ++y)
          if (concat[x] > concat[y]) ++inversions;
      s.sign = (inversions % 2 == 0) ? 1 : -1;
      split[j].push_back(std::move(s));
    }

  CompatibleAction out;
  out.lattice = whole;
  out.koszul = koszul;
  out.source = "assembled[";
  for (std::size_t k = 0; k < parts.size(); ++k) out.source += (k ? "," : "") + parts[k].source;
  out.source += "]";
  const std::size_t order = whole.group()->order();
  for (std::size_t g = 0; g < order; ++g) {
    out.sigma.emplace_back(whole.action(g));
    // Block entries embedded once per element.
    std::vector<std::vector<LaurentMatrix>> embedded(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (!(IntMatrix(parts[k].lattice.action(g)) == whole.action(g).submatrix(blocks[k], blocks[k])))
        throw Error(ErrorKind::GroupMismatch, "block action disagrees with the whole lattice");
      for (const auto& t : parts[k].T[g]) {
        LaurentMatrix e(t.rows(), t.cols(), n);
        for (std::size_t r = 0; r < t.rows(); ++r)
          for (std::size_t c = 0; c < t.cols(); ++c) e(r, c) = embed(t(r, c), n, blocks[k]);
        embedded[k].push_back(std::move(e));
      }
    }
    std::vector<LaurentMatrix> per_degree;
    for (std::size_t j = 0; j <= n; ++j) {
      const auto& sp = split[j];
      LaurentMatrix t(sp.size(), sp.size(), n);
      for (std::size_t r = 0; r < sp.size(); ++r)
        for (std::size_t c = 0; c < sp.size(); ++c) {
          if (sp[r].degree != sp[c].degree) continue;
          LaurentPoly entry = LaurentPoly::constant(n, sp[r].sign * sp[c].sign);
          for (std::size_t k = 0; k < blocks.size() && !entry.is_zero(); ++k)
            entry = entry * embedded[k][sp[r].degree[k]](sp[r].index[k], sp[c].index[k]);
          t(r, c) = std::move(entry);
        }
      per_degree.push_back(std::move(t));
    }
    out.T.push_back(std::move(per_degree));
  }
  return out;
}

CompatibleAction build_action(const ZGLattice& m, ActionSource source) {
  const auto blocks = coordinate_blocks(m);
  std::vector<CompatibleAction> parts;
  for (const auto& block : blocks) {
    ZGLattice bl = block_lattice(m, block);
    if (bl.rank() >= 3)
      throw Error(ErrorKind::NotInCatalog, "coordinate block of rank " + std::to_string(bl.rank()) +
                                               " has no compatible action constructor");
    auto solve = [&]() {
      const auto image = image_set(bl);
      for (std::size_t g = 0; g < bl.group()->order(); ++g) {
        GroupPtr cyc = FiniteMatrixGroup::enumerate(2, {bl.action(g)});
        if (cyc->order() != image.size()) continue;
        CompatibleAction base = solve_rank2(bl.action(g));
        std::vector<std::size_t> pi(bl.group()->order());
        for (std::size_t x = 0; x < pi.size(); ++x) pi[x] = base.group()->find(bl.action(x));
        return pullback(base, bl, pi);
      }
      throw Error(ErrorKind::NotInCatalog, "rank-2 block with non-cyclic image outside the catalog");
    };
    if (bl.rank() == 1 || source == ActionSource::Catalog) {
      parts.push_back(catalog_action(bl));
    } else if (source == ActionSource::Solver) {
      parts.push_back(solve());
    } else {
      try {
        parts.push_back(catalog_action(bl));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInCatalog) throw;
        parts.push_back(solve());
      }
    }
  }
  CompatibleAction action = assemble_direct_sum(m, blocks, parts);
  Certificate cert = verify(action);
  if (!cert.verified) {
    std::string why = cert.witnesses.empty() ? "" : ": " + cert.witnesses.front().condition;
    throw Error(ErrorKind::UncertifiedAction, "assembled action failed certification" + why);
  }
  return action;
}

}  // namespace orbicoh
