#include <gtest/gtest.h>

#include "orbicoh/cohomology.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/models.hpp"

using namespace orbicoh;

namespace {

FinAbGroup G(std::size_t free, std::vector<std::pair<long, std::size_t>> powers = {}) {
  return FinAbGroup::from_powers(free, powers);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(GroupCohomology, Examples) {
  auto m1 = group_cohomology_range(models::z4_m1(), 3);
  EXPECT_EQ(m1, (std::vector<FinAbGroup>{G(0), G(0, {{2, 1}}), G(0), G(0, {{2, 1}})}));
  EXPECT_EQ(group_cohomology(models::z4_p(), 0), G(invariants(models::z4_p()).rank));
  ZGLattice y2 = models::y2();
  ZGLattice l1 = ZGLattice::from_generator_images(y2.group(), {IntMatrix{{-1}}, IntMatrix{{-1}}});
  EXPECT_EQ(group_cohomology(l1, 1), G(0, {{2, 1}}));
}

TEST(E2, Y1Rows) {
  E2Result r = e2_assembly(models::y1(), 4);
  EXPECT_EQ(r.totals[0], G(1));
  EXPECT_EQ(r.totals[1], G(0));
  EXPECT_EQ(r.totals[2], G(5, {{4, 1}, {2, 4}}));
  EXPECT_EQ(r.totals[4], G(5, {{4, 4}, {2, 14}}));
  EXPECT_EQ(r.page.at(0, 0), G(1));
  EXPECT_TRUE(r.page.hypothesis_holds);
}

TEST(E2, CellsAnnihilatedByGroupOrder) {
  E2Result r = e2_assembly(models::y2(), 5);
  for (std::size_t j = 0; j < r.page.cells.size(); ++j)
    for (std::size_t i = 1; i < r.page.cells[j].size(); ++i) {
      const FinAbGroup& c = r.page.at(i, j);
      EXPECT_EQ(c.free_rank(), 0u);
      for (const auto& t : c.torsion()) EXPECT_EQ(4 % t, 0);
    }
}

TEST(E2, TrivialGroupGivesTorusCohomology) {
  E2Result r = e2_assembly(ZGLattice::trivial(FiniteMatrixGroup::trivial(6), 6), 6);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(r.totals[k], G(binomial(6, k)));
}

TEST(E2, HypothesisGate) {
  GroupPtr c3 = FiniteMatrixGroup::enumerate(3, {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
  ZGLattice perm = ZGLattice::defining(c3);
  try {
    e2_assembly(perm, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisUnverified);
  }
  E2Result forced = e2_assembly(perm, 3, true);
  EXPECT_TRUE(forced.page.forced);
  EXPECT_FALSE(forced.page.hypothesis_holds);
}

TEST(TotalComplex, RanksAndComposition) {
  CompatibleAction a = build_action(models::y2());
  FiniteGroupResolution p = choose_resolution(models::y2().group(), 5);
  TotalComplex tc = total_complex(a, p, 4);
  for (std::size_t k = 0; k <= 5; ++k) {
    std::size_t expected = 0;
    for (std::size_t i = 0; i <= k; ++i)
      if (k - i <= 6) expected += p.rank(i) * binomial(6, k - i);
    EXPECT_EQ(tc.ranks[k], expected);
  }
  for (std::size_t k = 0; k + 1 < tc.coboundaries.size(); ++k)
    EXPECT_TRUE((tc.coboundaries[k + 1] * tc.coboundaries[k]).is_zero());
  EXPECT_TRUE(total_composition_vanishes(a, p, 3));
  CompatibleAction y1 = build_action(models::y1());
  EXPECT_TRUE(total_composition_vanishes(y1, choose_resolution(models::y1().group(), 5), 3));
}

TEST(TotalComplex, DegreeZeroIsZ) {
  for (const ZGLattice& m : {models::y1(), models::y2(), models::z4_m2()}) {
    CompatibleAction a = build_action(m);
    auto h = total_complex_cohomology(a, choose_resolution(m.group(), 2), 1);
    EXPECT_EQ(h[0], G(1));
  }
}

TEST(TotalComplex, RejectsUncertifiedAction) {
  CompatibleAction a = build_action(models::y1());
  const std::size_t t = a.group()->generator_indices()[0];
  a.T[t][1](2, 3) = a.T[t][1](2, 3) + LaurentPoly::constant(6, 1);
  try {
    total_complex(a, choose_resolution(a.group(), 3), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UncertifiedAction);
  }
}

TEST(Collapse, Y1AndY2) {
  for (const ZGLattice& m : {models::y1(), models::y2()}) {
    CollapseReport r = collapse_verify(m, 4);
    EXPECT_TRUE(r.all_agree);
    EXPECT_TRUE(r.certificate.verified);
  }
  CollapseReport s = collapse_verify(models::y1(), 4, ActionSource::Solver);
  EXPECT_TRUE(s.all_agree);
}

TEST(Collapse, SwapLatticeMatchesAbelianization) {
  GroupPtr swap = FiniteMatrixGroup::enumerate(2, {IntMatrix{{0, 1}, {1, 0}}});
  ZGLattice m = ZGLattice::defining(swap);
  CollapseReport r = collapse_verify(m, 3);
  EXPECT_TRUE(r.all_agree);
  EXPECT_EQ(r.rows[1].total, G(1));
  EXPECT_EQ(r.rows[2].total, G(0, {{2, 1}}));
  // Gamma_ab = M_G + Z/2 = Z + Z/2; T(H^2) = T(Gamma_ab), rank H^1 = rank Gamma_ab.
  FinAbGroup ab = coinvariants(m) + group_abelianization(swap);
  EXPECT_EQ(ab, G(1, {{2, 1}}));
  EXPECT_EQ(r.rows[2].total.torsion_part(), ab.torsion_part());
  EXPECT_EQ(r.rows[1].total.free_rank(), ab.free_rank());
}

TEST(ModP, Y2Dimensions) {
  CompatibleAction a = build_action(models::y2());
  FiniteGroupResolution p = choose_resolution(models::y2().group(), 5);
  auto dims = mod_p_cohomology(a, p, 4, 2);
  EXPECT_EQ(dims[0], 1u);
  EXPECT_EQ(dims[2], 30u);
  E2Result e2 = e2_assembly(models::y2(), 5);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(dims[k], uct_mod_p_dimension(e2.totals[k], e2.totals[k + 1], 2));
  EXPECT_THROW(mod_p_cohomology(a, p, 2, 6), Error);
}
