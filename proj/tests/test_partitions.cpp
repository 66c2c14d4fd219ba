#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "mcfluct/error.hpp"
#include "mcfluct/partitions.hpp"

using namespace mcfluct;

TEST(PartitionTable, KnownValues) {
  const PartitionTable table(100, 100);
  EXPECT_EQ(canonical_multiplicity(table, 10, 10), 42);
  EXPECT_EQ(canonical_multiplicity(table, 16, 5), 101);
  EXPECT_EQ(canonical_multiplicity(table, 2, 2), 2);
  EXPECT_EQ(canonical_multiplicity(table, 3, 5), 3);
  EXPECT_EQ(canonical_multiplicity(table, 100, 100), BigInt("190569292"));
}

TEST(PartitionTable, EdgeValues) {
  const PartitionTable table(20, 20);
  EXPECT_EQ(table.count(0, 5), 1);
  EXPECT_EQ(table.count(0, 0), 1);
  EXPECT_EQ(table.count(7, 0), 0);
  EXPECT_EQ(table.count(7, 1), 1);
  // More parts than quanta cannot add partitions.
  EXPECT_EQ(table.count(5, 20), table.count(5, 5));
}

TEST(PartitionTable, PartsBeyondNAreClamped) {
  const PartitionTable table(10, 1000);
  EXPECT_EQ(table.max_parts(), 10u);
  EXPECT_EQ(table.count(10, 1000), 42);
}

TEST(PartitionTable, ThrowsRangeErrorOutsideTable) {
  const PartitionTable table(10, 3);
  EXPECT_TRUE(table.covers(10, 3));
  EXPECT_FALSE(table.covers(11, 3));
  EXPECT_FALSE(table.covers(10, 4));
  EXPECT_THROW(table.count(11, 2), RangeError);
  EXPECT_THROW(table.count(8, 4), RangeError);
}

TEST(PartitionTable, RecurrenceHoldsEverywhere) {
  const PartitionTable table(150, 40);
  for (std::size_t N = 1; N <= 40; ++N) {
    for (std::size_t n = N; n <= 150; ++n) {
      ASSERT_EQ(table.count(n, N), table.count(n, N - 1) + table.count(n - N, N)) << n << "," << N;
    }
  }
}

TEST(PartitionTable, LargeValuesAreExact) {
  const PartitionTable table(1000, 1000);
  EXPECT_EQ(table.count(1000, 1000),
            BigInt("24061467864032622473692149727991"));
}

TEST(HolePartitionFunction, FrozenTable) {
  const auto holes = hole_partition_function(5, 2);
  const std::vector<int> expected = {1, 1, 2, 2, 2, 1, 1};
  ASSERT_EQ(holes.max_energy(), expected.size() - 1);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(holes.count(i), expected[i]) << i;
  EXPECT_EQ(holes.count(100), 0);
  EXPECT_EQ(holes.level_cap(), 3u);
  EXPECT_EQ(holes.n_ex(), 2u);
}

TEST(HolePartitionFunction, FullyExcitedSeaHasOneConfiguration) {
  const auto holes = hole_partition_function(7, 7);
  EXPECT_EQ(holes.max_energy(), 0u);
  EXPECT_EQ(holes.count(0), 1);
}

TEST(HolePartitionFunction, AgreesWithDirectDp) {
  for (std::size_t N = 1; N <= 14; ++N) {
    for (std::size_t k = 1; k <= N; ++k) {
      const auto holes = hole_partition_function(N, k);
      for (std::size_t i = 0; i <= holes.max_energy() + 2; ++i) {
        ASSERT_EQ(holes.count(i), bounded_multiplicity_direct(i, k, N - k))
            << "N=" << N << " k=" << k << " i=" << i;
      }
    }
  }
}

TEST(HolePartitionFunction, RejectsBadExcitedCount) {
  EXPECT_THROW(hole_partition_function(5, 0), DomainError);
  EXPECT_THROW(hole_partition_function(5, 6), DomainError);
}

TEST(BoundedPartitionTable, RejectsMismatchedSize) {
  EXPECT_THROW(BoundedPartitionTable(2, 3, std::vector<BigInt>(3)), InternalError);
}

TEST(BoundedMultiplicityDirect, SmallCases) {
  EXPECT_EQ(bounded_multiplicity_direct(0, 0, 0), 1);
  EXPECT_EQ(bounded_multiplicity_direct(1, 0, 5), 0);
  EXPECT_EQ(bounded_multiplicity_direct(4, 2, 2), 1);  // 2+2
  EXPECT_EQ(bounded_multiplicity_direct(3, 2, 2), 1);  // 2+1
  EXPECT_EQ(bounded_multiplicity_direct(6, 3, 3), 3);  // 3+3, 3+2+1, 2+2+2
}

TEST(PartitionCache, GrowsAndReusesTables) {
  PartitionCache cache;
  const auto small = cache.table(10, 5);
  EXPECT_TRUE(small->covers(10, 5));
  const auto again = cache.table(8, 4);
  EXPECT_EQ(small.get(), again.get());
  const auto larger = cache.table(50, 20);
  EXPECT_TRUE(larger->covers(50, 20));
  EXPECT_EQ(larger->count(10, 5), small->count(10, 5));
}

TEST(PartitionCache, HoleTablesAreShared) {
  PartitionCache cache;
  EXPECT_EQ(cache.holes(9, 4).get(), cache.holes(9, 4).get());
  EXPECT_NE(cache.holes(9, 4).get(), cache.holes(9, 5).get());
}

TEST(PartitionCache, ConcurrentAccessIsConsistent) {
  PartitionCache cache;
  std::vector<std::thread> threads;
  std::vector<BigInt> results(8);
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] {
      const auto table = cache.table(60 + 10 * t, 30);
      results[t] = table->count(60, 30);
      cache.holes(12, 1 + t % 12);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, results.front());
}
