#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "mcfluct/fraction.hpp"
#include "mcfluct/microcanonical.hpp"
#include "mcfluct/partitions.hpp"
#include "mcfluct/statistics.hpp"

namespace mcfluct {

/// Canonical-ensemble state at Boltzmann factor x = exp(-1/T) (hbar omega = k_B = 1).
struct ThermalPoint {
  double x = 0.0;
  double mean_excitation = 0.0;  // <n>
  GroundStateStats ce_stats;
};

/// Relative weight below which the tail of the n-series is dropped.
inline constexpr double kSeriesTolerance = 1e-12;

/// Canonical statistics as the Boltzmann mixture of microcanonical shells,
/// P_CE(n) proportional to Omega(n, N) x^n. Shell data (log weight, MCE mean
/// and variance) is computed on demand and kept, so sweeping many x values at
/// one (N, statistics) pays for each shell once. Thread-safe.
class CanonicalEnsemble {
 public:
  /// Statistics must have a closed-form multiplicity (see distribution()).
  CanonicalEnsemble(PartitionCache& cache, std::size_t N, Statistics statistics);

  std::size_t N() const noexcept { return N_; }
  const Statistics& statistics() const noexcept { return statistics_; }

  /// DomainError unless 0 < x < 1; ResourceError if the truncated series would
  /// need more shells than the partition table budget allows.
  ThermalPoint at(double x);

  /// Number of shells (n = 0, 1, ...) summed by the most recent at() call.
  std::size_t last_shell_count() const;

 private:
  struct Shell {
    double log_weight;  // log Omega(n, N)
    double mean;        // MCE <N_ex>
    double variance;    // MCE (delta N_0)^2
  };

  void extend_shells(std::size_t count);

  PartitionCache& cache_;
  std::size_t N_;
  Statistics statistics_;
  mutable std::mutex mutex_;
  std::vector<Shell> shells_;
  std::size_t last_shell_count_ = 0;
};

/// Analytic <n>(x) = sum_{j=1}^{N} j x^j / (1 - x^j), independent of statistics.
double mean_excitation(double x, std::size_t N);

ThermalPoint ce_stats_at(PartitionCache& cache, double x, std::size_t N,
                         const Statistics& statistics);

struct FesCanonicalFluctuation {
  double variance = 0.0;
  double fluctuation = 0.0;
};

/// g (delta N_0)^2_F + (1 - g) (delta N_0)^2_B at the same x.
FesCanonicalFluctuation ce_fluctuation_fes(PartitionCache& cache, double x, std::size_t N,
                                           const Fraction& g);
FesCanonicalFluctuation ce_fluctuation_fes(CanonicalEnsemble& fermi, CanonicalEnsemble& bose,
                                           double x, const Fraction& g);

/// x in (0, 1) with |<n>(x) - target_n| < 1e-9 max(1, target_n), by bisection.
/// DomainError for target_n <= 0; RangeError if the target needs x above
/// 1 - 1e-12.
double invert_mean_excitation(double target_n, std::size_t N, const Statistics& statistics);

}  // namespace mcfluct
