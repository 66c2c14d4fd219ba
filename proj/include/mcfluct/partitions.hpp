#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mcfluct {

using BigInt = mpz_class;

/// Canonical multiplicities Omega(n, N): the number of partitions of n into at
/// most N parts, i.e. the coefficient of x^n in prod_{j=1}^{N} 1/(1 - x^j).
///
/// Storage is column-major. Column c holds Omega(n, c) for c <= n <= max_n;
/// queries with N > n are answered from column n, since a partition of n never
/// has more than n parts. Immutable after construction.
class PartitionTable {
 public:
  PartitionTable(std::size_t max_n, std::size_t max_parts);

  std::size_t max_n() const noexcept { return max_n_; }
  std::size_t max_parts() const noexcept { return max_parts_; }

  /// True when count(n, parts) can be answered without a RangeError.
  bool covers(std::size_t n, std::size_t parts) const noexcept;

  /// Omega(n, parts). Throws RangeError naming the bound that was exceeded.
  const BigInt& count(std::size_t n, std::size_t parts) const;

 private:
  std::size_t max_n_;
  std::size_t max_parts_;
  std::vector<std::vector<BigInt>> columns_;  // columns_[c - 1][n - c]
};

const BigInt& canonical_multiplicity(const PartitionTable& table, std::size_t n,
                                     std::size_t parts);

/// Coefficients Omega_h(i, n_ex) of the hole-space partition function: the
/// number of ways n_ex bosons occupy levels 0..level_cap with total energy i.
/// Equivalently, partitions of i into at most n_ex parts each at most level_cap.
class BoundedPartitionTable {
 public:
  BoundedPartitionTable(std::size_t n_ex, std::size_t level_cap, std::vector<BigInt> counts);

  std::size_t n_ex() const noexcept { return n_ex_; }
  std::size_t level_cap() const noexcept { return level_cap_; }
  /// Highest energy with a nonzero coefficient, n_ex * level_cap.
  std::size_t max_energy() const noexcept { return counts_.size() - 1; }

  /// Omega_h(i, n_ex); zero for i beyond max_energy().
  const BigInt& count(std::size_t i) const noexcept;
  std::span<const BigInt> counts() const noexcept { return counts_; }

 private:
  std::size_t n_ex_;
  std::size_t level_cap_;
  std::vector<BigInt> counts_;
};

/// Builds Z^H_{n_ex}(x) for the hole space of an N-fermion ground state
/// (level cap N - n_ex) with the multi-boson recursion
///
///   Z_k(x) = (1/k) sum_{j=1}^{k} Z_1(x^j) Z_{k-j}(x),   Z_0 = 1,
///   Z_1(x) = sum_{i=0}^{N-n_ex} x^i.
///
/// Each Z_k is carried as an integer numerator over the common denominator k;
/// every coefficient must divide exactly, otherwise InternalError is thrown.
/// Requires 1 <= n_ex <= N (DomainError otherwise).
BoundedPartitionTable hole_partition_function(std::size_t N, std::size_t n_ex);

/// Partitions of i into at most max_parts parts, each part at most max_part,
/// by direct dynamic programming over part sizes. Independent of the
/// recursion in hole_partition_function.
BigInt bounded_multiplicity_direct(std::size_t i, std::size_t max_parts, std::size_t max_part);

/// Memoizing store for partition tables, shared by every computation in an
/// engine. Returned tables are immutable and stay valid for as long as the
/// caller holds the pointer; a request exceeding the current canonical table
/// replaces it with a larger one (growing n geometrically) without touching
/// tables already handed out. Safe for concurrent use.
class PartitionCache {
 public:
  /// A table covering at least (max_n, max_parts).
  std::shared_ptr<const PartitionTable> table(std::size_t max_n, std::size_t max_parts);

  /// Hole-space table for (N, n_ex), built once per key.
  std::shared_ptr<const BoundedPartitionTable> holes(std::size_t N, std::size_t n_ex);

 private:
  std::mutex table_mutex_;
  std::shared_ptr<const PartitionTable> table_;

  std::mutex holes_mutex_;
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const BoundedPartitionTable>>
      holes_;
};

}  // namespace mcfluct
