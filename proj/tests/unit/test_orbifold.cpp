#include <gtest/gtest.h>

#include "orbicoh/error.hpp"
#include "orbicoh/models.hpp"
#include "orbicoh/orbifold.hpp"

using namespace orbicoh;

namespace {

FinAbGroup G(std::size_t free, std::vector<std::pair<long, std::size_t>> powers = {}) {
  return FinAbGroup::from_powers(free, powers);
}

OrbifoldModel y1() { return make_model("Y1", models::y1(), {"t"}); }
OrbifoldModel y2() { return make_model("Y2", models::y2(), {"s1", "s2"}); }

}  // namespace

TEST(Gerbes, Y1) {
  GerbeGroups g = gerbe_groups(y1());
  EXPECT_EQ(g.flat.to_string(), "U(1)^5 + (Z/2)^4");
  EXPECT_EQ(g.gerbes, G(4, {{2, 4}}));
}

TEST(Gerbes, TrivialGroup) {
  OrbifoldModel torus = make_model("T6", ZGLattice::trivial(FiniteMatrixGroup::trivial(6), 6));
  GerbeGroups g = gerbe_groups(torus);
  EXPECT_EQ(g.gerbes, G(20));
  EXPECT_EQ(g.flat.circle_rank, 15u);
  EXPECT_TRUE(g.flat.torsion.is_trivial());
}

TEST(Gerbes, Y2) {
  GerbeGroups g = gerbe_groups(y2());
  EXPECT_EQ(g.gerbes, G(8, {{2, 19}}));
  EXPECT_EQ(g.flat.circle_rank, 3u);
  EXPECT_EQ(g.flat.torsion, G(0, {{2, 19}}));
}

TEST(FixedPoints, Y1HalfTurn) {
  OrbifoldModel m = y1();
  const auto& group = m.lattice.group();
  Subgroup q = subgroup_generated(group, {group->power(group->generator_indices()[0], 2)});
  FixedPointReport r = fixed_points(m, q);
  EXPECT_EQ(r.h1, G(0, {{2, 4}}));
  EXPECT_EQ(r.component_count, 16);
  EXPECT_EQ(r.component_dimension, 2u);
  EXPECT_EQ(r.classes.size(), 16u);
}

TEST(FixedPoints, Y2WholeGroupAndTrivial) {
  OrbifoldModel m = y2();
  FixedPointReport r = fixed_points(m, whole_group(m.lattice.group()));
  EXPECT_EQ(r.component_count, 64);
  EXPECT_EQ(r.component_dimension, 0u);
  FixedPointReport t = fixed_points(m, subgroup_generated(m.lattice.group(), {}));
  EXPECT_EQ(t.component_count, 1);
  EXPECT_EQ(t.component_dimension, 6u);
}

TEST(SplittingClasses, RepresentativesRoundTrip) {
  OrbifoldModel m = y2();
  SplittingClasses sc(m.lattice, whole_group(m.lattice.group()));
  for (const auto& coords : sc.enumerate()) EXPECT_EQ(sc.class_of(sc.representative(coords)), coords);
}

TEST(Classes, Y1OrderTwo) {
  ClassReport r = order_p_subgroup_classes(y1(), 2);
  EXPECT_EQ(r.total, 10u);
  EXPECT_EQ(r.fingerprints.size(), 2u);
  EXPECT_EQ(r.fingerprints.at("Z^2 x Z/2"), 6u);
  EXPECT_EQ(r.fingerprints.at("Z^2 ⋊ Z/4"), 4u);
}

TEST(Classes, Y2EachSubgroupHasSixteenLifts) {
  ClassReport r = order_p_subgroup_classes(y2(), 2);
  ASSERT_EQ(r.subgroups.size(), 3u);
  for (const auto& s : r.subgroups) {
    EXPECT_EQ(s.h1.order(), 16);
    EXPECT_EQ(s.class_count, 16u);
  }
}

TEST(Classes, TrivialGroupHasNone) {
  OrbifoldModel torus = make_model("T2", ZGLattice::trivial(FiniteMatrixGroup::trivial(2), 2));
  EXPECT_EQ(order_p_subgroup_classes(torus, 2).total, 0u);
  EXPECT_THROW(order_p_subgroup_classes(torus, 4), Error);
}

TEST(Abelianization, Models) {
  EXPECT_EQ(abelianization(y1()), G(0, {{4, 1}, {2, 4}}));
  EXPECT_EQ(abelianization(y2()), G(0, {{2, 8}}));
  GroupPtr z4 = models::z4();
  OrbifoldModel triv = make_model("trivial", ZGLattice::trivial(z4, 3));
  EXPECT_EQ(abelianization(triv), G(3, {{4, 1}}));
}

TEST(Brown, StableRange) {
  auto rows = brown_stable_check(y1(), {7, 8, 9});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_TRUE(r.agree) << r.degree;
  EXPECT_EQ(rows[0].lhs, G(0, {{2, 12}}));
  EXPECT_EQ(rows[1].lhs, G(0, {{4, 8}, {2, 20}}));
  EXPECT_EQ(rows[2].lhs, rows[0].lhs);
}

TEST(Brown, Guards) {
  try {
    brown_stable_check(y2(), {7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedModel);
  }
  try {
    brown_stable_check(y1(), {6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}
