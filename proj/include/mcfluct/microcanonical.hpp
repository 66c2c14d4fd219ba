#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcfluct/partitions.hpp"
#include "mcfluct/statistics.hpp"

namespace mcfluct {

/// omega(n, N_ex, N) for N_ex = 1..N at fixed excitation n.
struct MultiplicityDistribution {
  std::size_t n = 0;
  std::size_t N = 0;
  Statistics statistics = Statistics::bose();
  std::vector<BigInt> omega;  // omega[N_ex - 1]

  /// omega(n, n_ex, N); n_ex must be in 1..N.
  const BigInt& at(std::size_t n_ex) const { return omega.at(n_ex - 1); }
  BigInt total() const;
};

/// Occupation statistics of the T=0 ground-state configuration.
struct GroundStateStats {
  double mean_excited = 0.0;   // <N_ex>
  double second_moment = 0.0;  // <N_ex^2>
  double fluctuation = 0.0;    // delta N_0 = sqrt(<N_ex^2> - <N_ex>^2)

  double variance() const noexcept { return fluctuation * fluctuation; }
};

/// Exact moment sums S_k = sum_{N_ex} omega * N_ex^k, k = 0, 1, 2.
struct MomentSums {
  BigInt s0;
  BigInt s1;
  BigInt s2;
};

// Minimum quanta to lift n_ex fermions from the Fermi level into distinct
// levels above it, and to dig n_ex holes at or below it.
constexpr std::uint64_t particle_min_quanta(std::uint64_t n_ex) { return n_ex * (n_ex + 1) / 2; }
constexpr std::uint64_t hole_min_quanta(std::uint64_t n_ex) { return n_ex * (n_ex - 1) / 2; }

/// omega^B(n, n_ex, N) = Omega(n - n_ex, n_ex) for n >= n_ex, else 0.
/// Independent of N once N >= n_ex. DomainError if n_ex is not in 1..N.
BigInt bose_multiplicity(PartitionCache& cache, std::size_t n, std::size_t n_ex, std::size_t N);

/// omega^F(n, n_ex, N) from the particle/hole convolution
///
///   sum_{n_p + n_h = n} Omega(n_p - n_ex(n_ex+1)/2, n_ex) * Omega_h(n_h - n_ex(n_ex-1)/2, n_ex)
///
/// with the hole table taken at level cap N - n_ex. Zero when n < n_ex^2.
/// DomainError if n_ex is not in 1..N.
BigInt fermi_multiplicity(PartitionCache& cache, std::size_t n, std::size_t n_ex, std::size_t N);

/// Fills omega[1..N] using the closed form appropriate to the statistics.
/// FES is accepted only at g in {0, 1, 1/(N-1), (N-2)/(N-1)}; any other g
/// raises UnsupportedStatisticsError. At n = 0 every entry is zero.
MultiplicityDistribution distribution(PartitionCache& cache, std::size_t n, std::size_t N,
                                      const Statistics& statistics);

/// As distribution(), but FES at a g without a closed form falls back to the
/// quasiparticle enumerator under the given partition budget.
MultiplicityDistribution distribution_or_enumerate(PartitionCache& cache, std::size_t n,
                                                   std::size_t N, const Statistics& statistics,
                                                   std::uint64_t budget);

MomentSums moment_sums(const MultiplicityDistribution& d);

/// Moments and fluctuation with exact integer sums and one final division.
/// An all-zero distribution (n = 0) gives zero mean and zero fluctuation.
GroundStateStats ground_state_stats(const MultiplicityDistribution& d);
GroundStateStats ground_state_stats(const MomentSums& sums);

struct FluctuationRecord {
  std::size_t n = 0;
  double mean_excited = 0.0;
  double fluctuation = 0.0;
};

struct FluctuationSeries {
  std::size_t N = 0;
  Statistics statistics = Statistics::bose();
  std::vector<FluctuationRecord> rows;  // n = 0..n_max in order
};

/// Upper bound on canonical-table cells a sweep may allocate.
inline constexpr std::uint64_t kMaxTableCells = 100'000'000;

/// <N_ex> and delta N_0 for every n in [0, n_max]. Throws ResourceError,
/// before doing any work, if the partition table would exceed kMaxTableCells.
FluctuationSeries fluctuation_sweep(PartitionCache& cache, std::size_t N,
                                    const Statistics& statistics, std::size_t n_max,
                                    std::uint64_t budget);

}  // namespace mcfluct
