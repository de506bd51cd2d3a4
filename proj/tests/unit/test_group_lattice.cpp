#include <gtest/gtest.h>

#include "orbicoh/error.hpp"
#include "orbicoh/lattice.hpp"
#include "orbicoh/matrix_group.hpp"
#include "orbicoh/models.hpp"

using namespace orbicoh;

namespace {

const IntMatrix kRot{{0, 1}, {-1, 0}};
const IntMatrix kZ3{{0, -1}, {1, -1}};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Inconsistent;
}

// Characters are class functions; compare as sorted multisets over elements.
std::vector<Integer> sorted_character(const ZGLattice& m) {
  auto c = trace_character(m);
  std::sort(c.begin(), c.end());
  return c;
}

void expect_homomorphism(const ZGLattice& m) {
  const auto& g = *m.group();
  EXPECT_TRUE(m.action(FiniteMatrixGroup::identity()).is_identity());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      EXPECT_EQ(m.action(g.multiply(a, b)), m.action(b) * m.action(a));
}

}  // namespace

TEST(MatrixGroup, Enumerate) {
  EXPECT_EQ(FiniteMatrixGroup::enumerate(2, {kRot})->order(), 4u);
  EXPECT_EQ(FiniteMatrixGroup::enumerate(2, {kRot, IntMatrix{{0, 1}, {1, 0}}})->order(), 8u);
  EXPECT_EQ(kind_of([] { FiniteMatrixGroup::enumerate(2, {IntMatrix{{1, 1}, {0, 1}}}); }), ErrorKind::BoundExceeded);
  EXPECT_EQ(kind_of([] { FiniteMatrixGroup::enumerate(2, {IntMatrix{{2, 0}, {0, 1}}}); }), ErrorKind::NotUnimodular);
}

TEST(MatrixGroup, GroupAxioms) {
  GroupPtr g = FiniteMatrixGroup::enumerate(2, {kRot, IntMatrix{{0, 1}, {1, 0}}});
  for (std::size_t a = 0; a < g->order(); ++a) {
    EXPECT_EQ(g->multiply(a, g->inverse(a)), FiniteMatrixGroup::identity());
    EXPECT_EQ(g->order() % g->element_order(a), 0u);
    for (std::size_t b = 0; b < g->order(); ++b)
      EXPECT_EQ(g->matrix(g->multiply(a, b)), g->matrix(b) * g->matrix(a));
  }
}

TEST(MatrixGroup, ElementOrder) {
  GroupPtr z4 = FiniteMatrixGroup::enumerate(2, {kRot});
  EXPECT_EQ(z4->element_order(FiniteMatrixGroup::identity()), 1u);
  EXPECT_EQ(z4->element_order(z4->find(kRot)), 4u);
  GroupPtr z3 = FiniteMatrixGroup::enumerate(2, {kZ3});
  EXPECT_EQ(z3->element_order(z3->find(kZ3)), 3u);
}

TEST(MatrixGroup, Sylow) {
  GroupPtr z4 = FiniteMatrixGroup::enumerate(2, {kRot});
  EXPECT_EQ(sylow_subgroup(z4, 2).order(), 4u);
  EXPECT_EQ(sylow_subgroup(z4, 3).order(), 1u);
  GroupPtr g6 = FiniteMatrixGroup::enumerate(2, {kZ3, IntMatrix{{-1, 0}, {0, -1}}});
  EXPECT_EQ(g6->order(), 6u);
  EXPECT_EQ(sylow_subgroup(g6, 3).order(), 3u);
  EXPECT_EQ(sylow_subgroup(g6, 2).order(), 2u);
}

TEST(MatrixGroup, SubgroupGenerated) {
  GroupPtr z4 = models::z4();
  EXPECT_EQ(subgroup_generated(z4, {FiniteMatrixGroup::identity()}).order(), 1u);
  const std::size_t t = z4->generator_indices()[0];
  EXPECT_EQ(subgroup_generated(z4, {z4->power(t, 2)}).order(), 2u);
  GroupPtr v4 = models::y2().group();
  EXPECT_EQ(subgroup_generated(v4, {v4->generator_indices()[0]}).order(), 2u);
}

TEST(MatrixGroup, StructureAndAbelianization) {
  EXPECT_EQ(models::z4()->structure_name(), "Z/4");
  EXPECT_EQ(models::y2().group()->structure_name(), "(Z/2)^2");
  GroupPtr d8 = FiniteMatrixGroup::enumerate(2, {kRot, IntMatrix{{0, 1}, {1, 0}}});
  EXPECT_EQ(group_abelianization(d8), FinAbGroup::from_powers(0, {{2, 2}}));
  EXPECT_EQ(group_abelianization(models::z4()), FinAbGroup::cyclic(4));
  EXPECT_EQ(normalizer(subgroup_generated(d8, {d8->find(IntMatrix{{0, 1}, {1, 0}})})).order(), 4u);
}

TEST(Lattice, HomomorphismProperty) {
  expect_homomorphism(models::y1());
  expect_homomorphism(models::y2());
  expect_homomorphism(dual(models::y1()));
  expect_homomorphism(exterior_power(models::y1(), 3));
  expect_homomorphism(tensor(models::z4_m2(), models::z4_m2()));
}

TEST(Lattice, Dual) {
  EXPECT_EQ(trace_character(dual(models::z4_trivial())), trace_character(models::z4_trivial()));
  EXPECT_EQ(dual(models::z4_m1()).actions(), models::z4_m1().actions());
  EXPECT_EQ(trace_character(dual(models::z4_m2())), trace_character(models::z4_m2()));
  EXPECT_EQ(trace_character(dual(models::y1())), trace_character(models::y1()));
}

TEST(Lattice, DirectSumBuildsModels) {
  auto m1 = models::z4_m1(), m2 = models::z4_m2();
  ZGLattice sum = direct_sum({m1, m1, m2, m2});
  EXPECT_EQ(sum.rank(), 6u);
  EXPECT_EQ(sum.actions(), models::y1().actions());
  auto triv = ZGLattice::trivial(models::z4(), 1);
  EXPECT_EQ(direct_sum({triv, triv}).actions(), ZGLattice::trivial(models::z4(), 2).actions());
}

TEST(Lattice, TensorCharacters) {
  EXPECT_EQ(trace_character(tensor(models::z4_m1(), models::z4_m1())), trace_character(models::z4_trivial()));
  ZGLattice p = models::z4_p();
  EXPECT_EQ(trace_character(tensor(models::z4_m2(), models::z4_m2())), trace_character(direct_sum({p, p})));
  EXPECT_EQ(tensor(models::z4_trivial(), models::z4_m2()).actions(), models::z4_m2().actions());
}

TEST(Lattice, CharacterFunctoriality) {
  const ZGLattice m1 = models::z4_m1(), m2 = models::z4_m2();
  const ZGLattice lattices[] = {m1, m2, models::z4_p(), direct_sum({m1, m1, m2, m2})};
  for (const auto& a : lattices)
    for (const auto& b : lattices) {
      auto ca = trace_character(a), cb = trace_character(b);
      auto sum = trace_character(direct_sum({a, b}));
      auto prod = trace_character(tensor(a, b));
      for (std::size_t g = 0; g < ca.size(); ++g) {
        EXPECT_EQ(sum[g], ca[g] + cb[g]);
        EXPECT_EQ(prod[g], ca[g] * cb[g]);
      }
    }
  // chi_{Lambda^2}(g) = (chi(g)^2 - chi(g^2)) / 2.
  for (const auto& m : lattices) {
    if (m.rank() < 2) continue;
    auto c = trace_character(m);
    auto c2 = trace_character(exterior_power(m, 2));
    const auto& g = *m.group();
    for (std::size_t a = 0; a < g.order(); ++a) EXPECT_EQ(2 * c2[a], c[a] * c[a] - c[g.multiply(a, a)]);
  }
}

TEST(Lattice, ExteriorPowers) {
  EXPECT_EQ(exterior_power(models::z4_m2(), 0).rank(), 1u);
  EXPECT_TRUE(exterior_power(models::z4_m2(), 2).action(1).is_identity());
  ZGLattice p = models::z4_p(), m2 = models::z4_m2(), z = models::z4_trivial(), m1 = models::z4_m1();
  EXPECT_EQ(trace_character(exterior_power(models::y1(), 2)),
            trace_character(direct_sum({z, z, z, m2, m2, m2, m2, p, p})));
  EXPECT_EQ(trace_character(exterior_power(models::y1(), 3)),
            trace_character(direct_sum({m1, m1, m1, m1, m2, m2, m2, m2, p, p, p, p})));
  EXPECT_EQ(sorted_character(exterior_power(models::y1(), 6)), sorted_character(z));
}

TEST(Lattice, Restriction) {
  GroupPtr z4 = models::z4();
  ZGLattice y1 = models::y1();
  Subgroup trivial = subgroup_generated(y1.group(), {});
  EXPECT_TRUE(restrict_to(y1, trivial).action(0).is_identity());
  const std::size_t t = y1.group()->generator_indices()[0];
  Subgroup q = subgroup_generated(y1.group(), {y1.group()->power(t, 2)});
  ZGLattice r = restrict_to(y1, q);
  EXPECT_EQ(r.group()->order(), 2u);
  EXPECT_EQ(r.action(1), IntMatrix::diagonal({1, 1, -1, -1, -1, -1}, 6, 6));
  ZGLattice y2 = models::y2();
  ZGLattice r2 = restrict_to(y2, subgroup_generated(y2.group(), {y2.group()->generator_indices()[0]}));
  EXPECT_EQ(coordinate_blocks(r2).size(), 6u);
}

TEST(Lattice, InvariantsAndCoinvariants) {
  EXPECT_EQ(invariants(ZGLattice::trivial(models::z4(), 3)).rank, 3u);
  EXPECT_EQ(invariants(models::z4_m2()).rank, 0u);
  EXPECT_EQ(invariants(models::z4_p()).rank, 1u);
  EXPECT_EQ(coinvariants(ZGLattice::trivial(models::z4(), 2)), FinAbGroup::free(2));
  EXPECT_EQ(coinvariants(models::z4_m2()), FinAbGroup::cyclic(2));
  EXPECT_EQ(coinvariants(models::y2()), FinAbGroup::from_powers(0, {{2, 6}}));
}

TEST(Lattice, BlockDecomposition) {
  BlockDecomposition y1 = block_decomposition_in_basis(models::y1());
  EXPECT_EQ(y1.blocks, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2, 3}, {4, 5}}));
  EXPECT_TRUE(y1.hypothesis_holds);
  GroupPtr z4 = models::z4();
  EXPECT_EQ(block_decomposition_in_basis(ZGLattice::trivial(z4, 3)).blocks.size(), 3u);
  GroupPtr c3 = FiniteMatrixGroup::enumerate(3, {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
  BlockDecomposition perm = block_decomposition_in_basis(ZGLattice::defining(c3));
  EXPECT_EQ(perm.blocks.size(), 1u);
  EXPECT_EQ(perm.max_block, 3u);
  EXPECT_FALSE(perm.hypothesis_holds);
}

TEST(Lattice, TraceCharacter) {
  EXPECT_EQ(sorted_character(ZGLattice::trivial(models::z4(), 2)), (std::vector<Integer>{2, 2, 2, 2}));
  const auto& g = *models::z4();
  const std::size_t t = g.generator_indices()[0];
  auto m2 = trace_character(models::z4_m2());
  auto p = trace_character(models::z4_p());
  std::vector<Integer> m2_powers, p_powers;
  for (long k = 0; k < 4; ++k) {
    m2_powers.push_back(m2[g.power(t, k)]);
    p_powers.push_back(p[g.power(t, k)]);
  }
  EXPECT_EQ(m2_powers, (std::vector<Integer>{2, 0, -2, 0}));
  EXPECT_EQ(p_powers, (std::vector<Integer>{2, 0, 2, 0}));
}
