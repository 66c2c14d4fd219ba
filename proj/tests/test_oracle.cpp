#include <gtest/gtest.h>

#include <vector>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"
#include "mcfluct/oracle.hpp"

using namespace mcfluct;

TEST(PartitionEnumeration, CountsMatchTable) {
  PartitionCache cache;
  const auto table = cache.table(30, 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t N : {1, 3, 8, 30}) {
      EXPECT_EQ(BigInt(static_cast<unsigned long>(enumerate_partitions(n, N).size())),
                table->count(n, N));
    }
  }
}

TEST(PartitionEnumeration, OrderAndShape) {
  const auto all = enumerate_partitions(5, 3);
  ASSERT_EQ(all.size(), 5u);  // 5, 41, 32, 311, 221
  EXPECT_EQ(all.front().parts, (std::vector<std::uint32_t>{5}));
  EXPECT_EQ(all.back().parts, (std::vector<std::uint32_t>{2, 2, 1}));
  for (const auto& p : all) {
    EXPECT_EQ(p.total, 5u);
    EXPECT_TRUE(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
  }
  EXPECT_EQ(enumerate_partitions(0, 4).size(), 1u);
  EXPECT_TRUE(enumerate_partitions(3, 0).empty());
}

TEST(DurfeeSide, Examples) {
  EXPECT_EQ(durfee_side(PartitionShape{{}, 0}), 0u);
  EXPECT_EQ(durfee_side(PartitionShape{{5}, 5}), 1u);
  EXPECT_EQ(durfee_side(PartitionShape{{1, 1, 1, 1}, 4}), 1u);
  EXPECT_EQ(durfee_side(PartitionShape{{2, 2}, 4}), 2u);
  EXPECT_EQ(durfee_side(PartitionShape{{4, 3, 3, 1}, 11}), 3u);
}

TEST(OracleMultiplicities, EqualClosedFormsOnDeskGrid) {
  PartitionCache cache;
  for (std::size_t N = 1; N <= 8; ++N) {
    for (std::size_t n = 0; n <= 40; ++n) {
      for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
        ASSERT_EQ(oracle_multiplicities(cache, n, N, stats, kDefaultEnumerationBudget).omega,
                  distribution(cache, n, N, stats).omega)
            << stats.to_string() << " n=" << n << " N=" << N;
      }
    }
  }
}

TEST(OracleMultiplicities, FesDelegatesToQuasiparticleEnumerator) {
  PartitionCache cache;
  const auto semion = Statistics::fes(Fraction(1, 2));
  EXPECT_EQ(oracle_multiplicities(cache, 7, 5, semion, 1000).omega,
            enumerate_fes(cache, 7, 5, Fraction(1, 2)).omega);
}

TEST(OracleMultiplicities, BudgetIsEnforced) {
  PartitionCache cache;
  EXPECT_THROW(oracle_multiplicities(cache, 60, 20, Statistics::fermi(), 1000), ResourceError);
  EXPECT_THROW(oracle_multiplicities(cache, 5, 0, Statistics::fermi(), 1000), DomainError);
}

TEST(BruteForceCanonical, TwoFermionsAtHalf) {
  // Exact: mean 11/16, variance 87/256.
  const auto m = brute_force_canonical(0.5, 2, Statistics::fermi(), 200);
  EXPECT_NEAR(m.mean_excited, 11.0 / 16.0, 1e-15);
  EXPECT_NEAR(m.variance, 87.0 / 256.0, 1e-15);
}

TEST(BruteForceCanonical, TwoBosonsAtHalf) {
  // Exact: mean 7/8, variance 39/64.
  const auto m = brute_force_canonical(0.5, 2, Statistics::bose(), 200);
  EXPECT_NEAR(m.mean_excited, 7.0 / 8.0, 1e-15);
  EXPECT_NEAR(m.variance, 39.0 / 64.0, 1e-15);
}

TEST(BruteForceCanonical, OneParticleIsGeometric) {
  // Single oscillator: Z = 1/(1-x), <n> = x/(1-x), excited iff n >= 1.
  const double x = 0.3;
  for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
    const auto m = brute_force_canonical(x, 1, stats, 200);
    EXPECT_NEAR(m.partition_sum, 1.0 / (1.0 - x), 1e-14);
    EXPECT_NEAR(m.mean_excitation, x / (1.0 - x), 1e-14);
    EXPECT_NEAR(m.mean_excited, x, 1e-14);
    EXPECT_NEAR(m.variance, x * (1.0 - x), 1e-14);
  }
}

TEST(BruteForceCanonical, RejectsBadInput) {
  EXPECT_THROW(brute_force_canonical(1.0, 2, Statistics::fermi(), 10), DomainError);
  EXPECT_THROW(brute_force_canonical(0.5, 2, Statistics::fes(Fraction(1, 2)), 10),
               UnsupportedStatisticsError);
}
