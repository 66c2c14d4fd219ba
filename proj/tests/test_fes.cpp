#include <gtest/gtest.h>

#include <vector>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"
#include "mcfluct/oracle.hpp"

using namespace mcfluct;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

Fraction g_of(std::int64_t num, std::int64_t den) { return Fraction(num, den); }

}  // namespace

TEST(FesEnumerator, SemionWorkedExample) {
  PartitionCache cache;
  const auto d = enumerate_fes(cache, 3, 5, g_of(1, 2));
  EXPECT_EQ(d.omega, ints({1, 2, 0, 0, 0}));
  EXPECT_EQ(d.total(), 3);
}

TEST(FesEnumerator, EndpointsReduceToFermiAndBose) {
  PartitionCache cache;
  for (std::size_t N = 1; N <= 8; ++N) {
    for (std::size_t n = 0; n <= 30; ++n) {
      ASSERT_EQ(enumerate_fes(cache, n, N, g_of(1, 1)).omega,
                distribution(cache, n, N, Statistics::fermi()).omega);
      ASSERT_EQ(enumerate_fes(cache, n, N, g_of(0, 1)).omega,
                distribution(cache, n, N, Statistics::bose()).omega);
    }
  }
}

TEST(FesEnumerator, BudgetAndDomain) {
  PartitionCache cache;
  EXPECT_THROW(enumerate_fes(cache, 30, 10, g_of(1, 2), 100), ResourceError);
  EXPECT_THROW(enumerate_fes(cache, 3, 0, g_of(1, 2)), DomainError);
  EXPECT_THROW(enumerate_fes(cache, 3, 5, g_of(3, 2)), DomainError);
}

TEST(NearFermi, MatchesEnumerator) {
  PartitionCache cache;
  for (std::size_t N = 3; N <= 6; ++N) {
    const Fraction g(static_cast<std::int64_t>(N) - 2, static_cast<std::int64_t>(N) - 1);
    for (std::size_t n = 0; n <= 18; ++n) {
      const auto e = enumerate_fes(cache, n, N, g);
      for (std::size_t k = 1; k <= N; ++k) {
        ASSERT_EQ(fes_multiplicity_near_fermi(cache, n, k, N), e.at(k)) << n << "," << k << "," << N;
      }
    }
  }
}

TEST(NearBose, MatchesEnumerator) {
  PartitionCache cache;
  for (std::size_t N = 2; N <= 6; ++N) {
    const Fraction g(1, static_cast<std::int64_t>(N) - 1);
    for (std::size_t n = 0; n <= 18; ++n) {
      const auto e = enumerate_fes(cache, n, N, g);
      for (std::size_t k = 1; k <= N; ++k) {
        ASSERT_EQ(fes_multiplicity_near_bose(cache, n, k, N), e.at(k)) << n << "," << k << "," << N;
      }
    }
  }
}

TEST(NearFermi, GroundStateIsZeroForEveryN) {
  PartitionCache cache;
  for (std::size_t N = 3; N <= 10; ++N) {
    for (std::size_t k = 1; k <= N; ++k) EXPECT_EQ(fes_multiplicity_near_fermi(cache, 0, k, N), 0);
  }
}

TEST(ClosedForms, PreconditionsAreDomainErrors) {
  PartitionCache cache;
  EXPECT_THROW(fes_multiplicity_near_fermi(cache, 4, 1, 2), DomainError);
  EXPECT_THROW(fes_multiplicity_near_bose(cache, 4, 1, 1), DomainError);
  EXPECT_THROW(fes_multiplicity_near_bose(cache, 4, 6, 5), DomainError);
}

TEST(ClosedForms, ThreeParticleSemionFormsAgree) {
  // At N = 3 both special values equal 1/2.
  PartitionCache cache;
  for (std::size_t n = 0; n <= 60; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      ASSERT_EQ(fes_multiplicity_near_fermi(cache, n, k, 3), fes_multiplicity_near_bose(cache, n, k, 3));
    }
  }
}

TEST(ClosedForms, Dispatch) {
  EXPECT_EQ(fes_closed_form(5, g_of(0, 1)), FesClosedForm::bose);
  EXPECT_EQ(fes_closed_form(5, g_of(1, 1)), FesClosedForm::fermi);
  EXPECT_EQ(fes_closed_form(5, g_of(1, 4)), FesClosedForm::near_bose);
  EXPECT_EQ(fes_closed_form(5, g_of(3, 4)), FesClosedForm::near_fermi);
  EXPECT_FALSE(fes_closed_form(5, g_of(1, 2)).has_value());
  EXPECT_FALSE(fes_closed_form(2, g_of(1, 2)).has_value());
  // N = 2: 1/(N-1) = 1 is already Fermi.
  EXPECT_EQ(fes_closed_form(2, g_of(1, 1)), FesClosedForm::fermi);
  EXPECT_NE(supported_fes_forms(10).find("8/9"), std::string::npos);
}

TEST(ClosedForms, SumIdentityAtLargerScale) {
  PartitionCache cache;
  const auto table = cache.table(400, 40);
  for (std::size_t N : {4, 10, 40}) {
    for (std::size_t n = 1; n <= 400; n += 13) {
      BigInt near_fermi = 0;
      BigInt near_bose = 0;
      for (std::size_t k = 1; k <= N; ++k) {
        near_fermi += fes_multiplicity_near_fermi(cache, n, k, N);
        near_bose += fes_multiplicity_near_bose(cache, n, k, N);
      }
      ASSERT_EQ(near_fermi, table->count(n, N)) << n << "," << N;
      ASSERT_EQ(near_bose, table->count(n, N)) << n << "," << N;
    }
  }
}

TEST(Quasiparticles, StateFromPartition) {
  // N = 5, three quanta on the top particle, semions.
  const PartitionShape shape{{3}, 3};
  const auto s = quasiparticle_state(shape, 5, g_of(1, 2));
  EXPECT_EQ(s.levels, (std::vector<std::uint64_t>{1, 2, 3, 4, 8}));
  EXPECT_EQ(s.excitation, 3u);
  ASSERT_EQ(s.quasi_energies.size(), 5u);
  EXPECT_EQ(s.quasi_energies[0], g_of(1, 2));
  EXPECT_EQ(s.quasi_energies[4], g_of(15, 2) - g_of(2, 1));
}

TEST(Quasiparticles, ExcitedCountUsesTheShiftedFermiLevel) {
  // N = 5, g = 1/2: the third particle's shift of one level does not exceed g(r-1).
  EXPECT_EQ(fes_excited_count(PartitionShape{{1, 1, 1}, 3}, 5, g_of(1, 2)), 2u);
  EXPECT_EQ(fes_excited_count(PartitionShape{{1, 1, 1}, 3}, 5, g_of(0, 1)), 3u);
  EXPECT_EQ(fes_excited_count(PartitionShape{{2, 1}, 3}, 5, g_of(1, 2)), 2u);
  EXPECT_EQ(fes_excited_count(PartitionShape{{2, 1}, 3}, 5, g_of(1, 1)), 1u);
  EXPECT_EQ(fes_excited_count(PartitionShape{{2, 1}, 3}, 5, g_of(0, 1)), 2u);
  EXPECT_THROW(fes_excited_count(PartitionShape{{1, 1, 1}, 3}, 2, g_of(1, 2)), DomainError);
}

TEST(FermiLevel, IntegralOnTheGrid) {
  EXPECT_EQ(fes_fermi_level(5, g_of(1, 1)), g_of(9, 2));
  EXPECT_EQ(fes_fermi_level(5, g_of(0, 1)), g_of(1, 2));
  for (std::size_t N = 2; N <= 20; ++N) {
    const auto grid = discrete_g_grid(N);
    ASSERT_EQ(grid.size(), N);
    EXPECT_EQ(grid.front(), g_of(1, 1));
    EXPECT_EQ(grid.back(), g_of(0, 1));
    for (const auto& g : grid) EXPECT_TRUE((fes_fermi_level(N, g) + g_of(1, 2)).is_integer());
  }
  EXPECT_THROW(discrete_g_grid(1), DomainError);
}

TEST(GroundStateEnergy, InterpolatesBetweenStatistics) {
  // Fermions: sum of (i - 1/2) = N^2/2; bosons: N/2.
  EXPECT_EQ(fes_ground_state_energy(4, g_of(1, 1)), g_of(8, 1));
  EXPECT_EQ(fes_ground_state_energy(4, g_of(0, 1)), g_of(2, 1));
  EXPECT_EQ(fes_ground_state_energy(4, g_of(1, 2)), g_of(5, 1));
}

// Multiplicities change only where g crosses some m/d with d < N, so the
// coarser grid m/(N-1) does not bound the constant stretches.
TEST(Plateaus, OuterIntervalsAreConstant) {
  PartitionCache cache;
  for (std::size_t N : {4, 5}) {
    const std::int64_t d = static_cast<std::int64_t>(N) - 1;
    for (std::size_t n = 0; n <= 16; ++n) {
      const auto bottom = enumerate_fes(cache, n, N, g_of(0, 1));
      const auto top = enumerate_fes(cache, n, N, g_of(d - 1, d));
      for (std::int64_t q = 1; q < 4; ++q) {
        EXPECT_EQ(enumerate_fes(cache, n, N, g_of(q, 4 * d)).omega, bottom.omega);
        EXPECT_EQ(enumerate_fes(cache, n, N, g_of(d - 1, d) + g_of(q, 4 * d)).omega, top.omega);
      }
    }
  }
}

TEST(Plateaus, InteriorIntervalsSplitAtFinerFractions) {
  PartitionCache cache;
  // Both samples lie in [1/4, 1/2) for N = 5 but straddle 1/3.
  const auto below = enumerate_fes(cache, 4, 5, g_of(3, 10));
  const auto above = enumerate_fes(cache, 4, 5, g_of(2, 5));
  EXPECT_NE(below.omega, above.omega);
  EXPECT_EQ(below.total(), above.total());
}
