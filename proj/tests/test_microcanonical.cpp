#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"
#include "mcfluct/microcanonical.hpp"

using namespace mcfluct;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST(MinimumQuanta, TriangularNumbers) {
  EXPECT_EQ(particle_min_quanta(1), 1u);
  EXPECT_EQ(particle_min_quanta(4), 10u);
  EXPECT_EQ(hole_min_quanta(1), 0u);
  EXPECT_EQ(hole_min_quanta(4), 6u);
  // Together they give the Durfee-square threshold k^2.
  for (std::uint64_t k = 1; k < 50; ++k) EXPECT_EQ(particle_min_quanta(k) + hole_min_quanta(k), k * k);
}

TEST(BoseMultiplicity, TwoParticles) {
  PartitionCache cache;
  EXPECT_EQ(bose_multiplicity(cache, 2, 1, 2), 1);
  EXPECT_EQ(bose_multiplicity(cache, 2, 2, 2), 1);
  EXPECT_EQ(bose_multiplicity(cache, 1, 2, 2), 0);
}

TEST(FermiMultiplicity, WorkedExamples) {
  PartitionCache cache;
  EXPECT_EQ(fermi_multiplicity(cache, 2, 1, 2), 2);
  EXPECT_EQ(fermi_multiplicity(cache, 2, 2, 2), 0);
  EXPECT_EQ(fermi_multiplicity(cache, 3, 1, 5), 3);
  EXPECT_EQ(fermi_multiplicity(cache, 12, 2, 6), 42);
}

TEST(FermiMultiplicity, BadExcitedCountIsDomainError) {
  PartitionCache cache;
  EXPECT_THROW(fermi_multiplicity(cache, 5, 0, 3), DomainError);
  EXPECT_THROW(fermi_multiplicity(cache, 5, 4, 3), DomainError);
  EXPECT_THROW(bose_multiplicity(cache, 5, 4, 3), DomainError);
}

TEST(Distribution, FrozenRows) {
  PartitionCache cache;
  EXPECT_EQ(distribution(cache, 12, 6, Statistics::fermi()).omega, ints({6, 42, 10, 0, 0, 0}));
  EXPECT_EQ(distribution(cache, 3, 5, Statistics::fermi()).omega, ints({3, 0, 0, 0, 0}));
  EXPECT_EQ(distribution(cache, 2, 2, Statistics::bose()).omega, ints({1, 1}));
  EXPECT_EQ(distribution(cache, 2, 2, Statistics::fes(Fraction(0))).omega, ints({1, 1}));
}

TEST(Distribution, GroundStateHasNoExcitedParticles) {
  PartitionCache cache;
  for (const auto& stats : {Statistics::bose(), Statistics::fermi(), Statistics::fes(Fraction(3, 4))}) {
    const auto d = distribution(cache, 0, 5, stats);
    EXPECT_EQ(d.total(), 0) << stats.to_string();
    const auto s = ground_state_stats(d);
    EXPECT_EQ(s.mean_excited, 0.0);
    EXPECT_EQ(s.fluctuation, 0.0);
  }
}

TEST(Distribution, SumsToCanonicalMultiplicity) {
  PartitionCache cache;
  const auto table = cache.table(300, 25);
  for (std::size_t N : {1, 2, 7, 25}) {
    for (std::size_t n = 1; n <= 300; n += 7) {
      for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
        ASSERT_EQ(distribution(cache, n, N, stats).total(), table->count(n, N))
            << stats.to_string() << " n=" << n << " N=" << N;
      }
    }
  }
}

TEST(Distribution, UnsupportedGNamesTheSupportedValues) {
  PartitionCache cache;
  try {
    distribution(cache, 4, 6, Statistics::fes(Fraction(1, 2)));
    FAIL() << "expected UnsupportedStatisticsError";
  } catch (const UnsupportedStatisticsError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("1/5"), std::string::npos) << what;
    EXPECT_NE(what.find("4/5"), std::string::npos) << what;
    EXPECT_EQ(e.code(), ErrorCode::unsupported_statistics);
  }
}

TEST(Distribution, EnumerationFallbackRespectsBudget) {
  PartitionCache cache;
  const auto semion = Statistics::fes(Fraction(1, 2));
  EXPECT_EQ(distribution_or_enumerate(cache, 3, 5, semion, 100).omega, ints({1, 2, 0, 0, 0}));
  EXPECT_THROW(distribution_or_enumerate(cache, 40, 6, semion, 10), ResourceError);
}

TEST(GroundStateStats, ExactMomentsFromSums) {
  // omega = [1, 1] at N_ex = 1, 2: mean 3/2, variance 1/4.
  PartitionCache cache;
  const auto d = distribution(cache, 2, 2, Statistics::bose());
  const auto sums = moment_sums(d);
  EXPECT_EQ(sums.s0, 2);
  EXPECT_EQ(sums.s1, 3);
  EXPECT_EQ(sums.s2, 5);
  const auto s = ground_state_stats(sums);
  EXPECT_DOUBLE_EQ(s.mean_excited, 1.5);
  EXPECT_DOUBLE_EQ(s.second_moment, 2.5);
  EXPECT_DOUBLE_EQ(s.fluctuation, 0.5);
}

TEST(GroundStateStats, SingleChannelHasZeroFluctuation) {
  PartitionCache cache;
  // One quantum: exactly one particle is excited.
  for (const auto& stats : {Statistics::bose(), Statistics::fermi()}) {
    const auto s = ground_state_stats(distribution(cache, 1, 8, stats));
    EXPECT_EQ(s.mean_excited, 1.0);
    EXPECT_EQ(s.fluctuation, 0.0);
  }
}

TEST(GroundStateStats, InconsistentSumsAreInternalError) {
  MomentSums bad{BigInt(2), BigInt(4), BigInt(1)};
  EXPECT_THROW(ground_state_stats(bad), InternalError);
}

TEST(FluctuationSweep, RowsAreOrderedAndStartAtZero) {
  PartitionCache cache;
  const auto series = fluctuation_sweep(cache, 10, Statistics::fermi(), 50, kDefaultEnumerationBudget);
  ASSERT_EQ(series.rows.size(), 51u);
  for (std::size_t i = 0; i < series.rows.size(); ++i) EXPECT_EQ(series.rows[i].n, i);
  EXPECT_EQ(series.rows[0].mean_excited, 0.0);
  EXPECT_EQ(series.rows[0].fluctuation, 0.0);
}

TEST(FluctuationSweep, MatchesPerPointStatistics) {
  PartitionCache cache;
  const auto series = fluctuation_sweep(cache, 7, Statistics::bose(), 40, kDefaultEnumerationBudget);
  for (std::size_t n : {1, 13, 40}) {
    const auto s = ground_state_stats(distribution(cache, n, 7, Statistics::bose()));
    EXPECT_EQ(series.rows[n].mean_excited, s.mean_excited);
    EXPECT_EQ(series.rows[n].fluctuation, s.fluctuation);
  }
}

TEST(FluctuationSweep, MatchesIndependentEnumeration) {
  // Durfee-square enumeration of partitions of 50 into at most 30 parts.
  PartitionCache cache;
  const auto fermi = fluctuation_sweep(cache, 30, Statistics::fermi(), 50, kDefaultEnumerationBudget);
  EXPECT_NEAR(fermi.rows[50].mean_excited, 3.9251257797851973, 1e-13);
  EXPECT_NEAR(fermi.rows[50].fluctuation, 0.7598707536723526, 1e-13);
  const auto bose = fluctuation_sweep(cache, 30, Statistics::bose(), 50, kDefaultEnumerationBudget);
  EXPECT_NEAR(bose.rows[50].mean_excited, 13.527038325112917, 1e-12);
  EXPECT_NEAR(bose.rows[50].fluctuation, 5.074057620933203, 1e-12);
}

TEST(FluctuationSweep, RefusesOversizedWorkUpFront) {
  PartitionCache cache;
  EXPECT_THROW(fluctuation_sweep(cache, 5000, Statistics::fermi(), 100000, kDefaultEnumerationBudget),
               ResourceError);
  EXPECT_THROW(fluctuation_sweep(cache, 6, Statistics::fes(Fraction(1, 2)), 200, 1000), ResourceError);
  EXPECT_THROW(fluctuation_sweep(cache, 0, Statistics::fermi(), 10, kDefaultEnumerationBudget),
               DomainError);
}

TEST(FluctuationSweep, IsDeterministic) {
  PartitionCache a;
  PartitionCache b;
  const auto s1 = fluctuation_sweep(a, 12, Statistics::fermi(), 120, kDefaultEnumerationBudget);
  const auto s2 = fluctuation_sweep(b, 12, Statistics::fermi(), 120, kDefaultEnumerationBudget);
  for (std::size_t i = 0; i < s1.rows.size(); ++i) {
    EXPECT_EQ(s1.rows[i].mean_excited, s2.rows[i].mean_excited);
    EXPECT_EQ(s1.rows[i].fluctuation, s2.rows[i].fluctuation);
  }
}
