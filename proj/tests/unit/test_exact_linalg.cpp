#include <gtest/gtest.h>

#include <random>

#include "orbicoh/error.hpp"
#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/lattice.hpp"
#include "orbicoh/smith.hpp"

using namespace orbicoh;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> sparse(0, 3);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse(rng) == 0 ? 0 : entry(rng);
  return m;
}

// gcd of all k x k minors.
Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (const auto& rows : index_subsets(a.rows(), k))
    for (const auto& cols : index_subsets(a.cols(), k)) {
      Integer d = a.submatrix(rows, cols).determinant();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

void expect_valid_smith(const IntMatrix& a, const SmithForm& s) {
  ASSERT_EQ(s.U.rows(), a.rows());
  ASSERT_EQ(s.V.rows(), a.cols());
  EXPECT_EQ(abs(s.U.determinant()), 1);
  EXPECT_EQ(abs(s.V.determinant()), 1);
  EXPECT_EQ(s.U * a * s.V, IntMatrix::diagonal(s.d, a.rows(), a.cols()));
  for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
    EXPECT_GE(s.d[i], 0);
    if (s.d[i + 1] != 0) {
      EXPECT_EQ(s.d[i + 1] % s.d[i], 0);
    }
  }
}

}  // namespace

TEST(SmithForm, Identity) {
  SmithForm s = smith_form(IntMatrix::identity(3));
  EXPECT_EQ(s.d, (std::vector<Integer>{1, 1, 1}));
}

TEST(SmithForm, Zero) {
  SmithForm s = smith_form(IntMatrix::zero(2, 2));
  EXPECT_EQ(s.d, (std::vector<Integer>{0, 0}));
}

TEST(SmithForm, TwoByTwo) {
  IntMatrix a{{2, 4}, {6, 8}};
  SmithForm s = smith_form(a);
  EXPECT_EQ(s.d, (std::vector<Integer>{2, 4}));
  expect_valid_smith(a, s);
}

TEST(SmithForm, MinorGcdOracleOnRandomMatrices) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    SmithForm s = smith_form(a);
    expect_valid_smith(a, s);
    Integer product = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
      product *= s.d[k - 1];
      ASSERT_EQ(product, minor_gcd(a, k)) << "trial " << trial << " k " << k << "\n" << a.to_string();
    }
  }
}

TEST(SmithForm, LargeEntriesDoNotOverflow) {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = 3;
  a(1, 1) = 7;
  SmithForm s = smith_form(a);
  expect_valid_smith(a, s);
  EXPECT_EQ(s.d[0] * s.d[1], abs(a.determinant()));
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel_group(IntMatrix::zero(2, 1)), FinAbGroup::free(2));
  EXPECT_EQ(cokernel_group(IntMatrix{{2, 4}, {6, 8}}), FinAbGroup(0, {2, 4}));
  IntMatrix rot{{0, 1}, {-1, 0}};
  EXPECT_EQ(cokernel_group(rot - IntMatrix::identity(2)), FinAbGroup::cyclic(2));
}

TEST(ComplexCohomology, Examples) {
  EXPECT_EQ(complex_cohomology(IntMatrix::zero(3, 1), IntMatrix::zero(1, 3)), FinAbGroup::free(3));
  // Periodic Z/4 complex with trivial coefficients at even degree.
  EXPECT_EQ(complex_cohomology(IntMatrix{{4}}, IntMatrix{{0}}), FinAbGroup::cyclic(4));
  // M2 at odd degree: in (t - 1), out norm = 0.
  IntMatrix rot{{0, 1}, {-1, 0}};
  EXPECT_EQ(complex_cohomology(rot - IntMatrix::identity(2), IntMatrix::zero(2, 2)), FinAbGroup::cyclic(2));
}

TEST(ComplexCohomology, RejectsNonzeroComposition) {
  try {
    complex_cohomology(IntMatrix{{1}}, IntMatrix{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CompositionNonzero);
  }
}

TEST(RankModP, Examples) {
  EXPECT_EQ(rank_mod_p(IntMatrix::identity(3), 2), 3u);
  EXPECT_EQ(rank_mod_p(IntMatrix{{2, 4}, {6, 8}}, 2), 0u);
  EXPECT_EQ(rank_mod_p(IntMatrix{{2, 4}, {6, 8}}, 3), 2u);
  EXPECT_THROW(rank_mod_p(IntMatrix::identity(2), 4), Error);
}

TEST(RankModP, MatchesSmithDiagonal) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5);
    for (long p : {2L, 3L, 5L}) {
      std::size_t expected = 0;
      for (const auto& d : smith_diagonal(a))
        if (d % p != 0) ++expected;
      EXPECT_EQ(rank_mod_p(a, p), expected);
    }
  }
}

TEST(KernelBasis, SpansKernel) {
  IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  IntMatrix k = kernel_basis(a);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_EQ(cokernel_group(k).torsion().size(), 0u);  // saturated
}

TEST(FinAbGroup, Normalization) {
  FinAbGroup g(1, {6, 4, 1});
  EXPECT_EQ(g.torsion(), (std::vector<Integer>{2, 12}));
  EXPECT_EQ(g, FinAbGroup(1, {4, 6}));
  EXPECT_EQ(g.to_string(), "Z + Z/4 + Z/2 + Z/3");
  auto view = g.primary_view();
  EXPECT_EQ(view.at(2), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(view.at(3), (std::vector<unsigned>{1}));
}

TEST(FinAbGroup, NotationAndArithmetic) {
  FinAbGroup y1h2 = FinAbGroup::from_powers(5, {{4, 1}, {2, 4}});
  EXPECT_EQ(y1h2.to_string(), "Z^5 + Z/4 + (Z/2)^4");
  EXPECT_EQ(FinAbGroup().to_string(), "0");
  EXPECT_EQ(FinAbGroup::free(1).to_string(), "Z");
  EXPECT_EQ(y1h2.p_rank(2), 5u);
  EXPECT_EQ(y1h2.torsion_part().order(), 64);
  EXPECT_EQ(FinAbGroup::cyclic(2).power(3), FinAbGroup::from_powers(0, {{2, 3}}));
  EXPECT_EQ(FinAbGroup::cyclic(2) + FinAbGroup::cyclic(3), FinAbGroup::cyclic(6));
}

TEST(Primes, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}
