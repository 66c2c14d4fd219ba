#include "mcfluct/microcanonical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"

namespace mcfluct {

namespace {

void check_excited_count(std::size_t n_ex, std::size_t N, const char* what) {
  if (n_ex < 1 || n_ex > N) {
    throw DomainError(std::string(what) + " needs 1 <= n_ex <= N, got n_ex=" +
                      std::to_string(n_ex) + ", N=" + std::to_string(N));
  }
}

// Precision for the final moment divisions; far beyond the 1e-12 needed.
constexpr mp_bitcnt_t kRatioBits = 256;

double ratio(const BigInt& num, const BigInt& den) {
  mpf_class q(num, kRatioBits);
  q /= mpf_class(den, kRatioBits);
  return q.get_d();
}

}  // namespace

BigInt MultiplicityDistribution::total() const {
  BigInt sum = 0;
  for (const auto& w : omega) sum += w;
  return sum;
}

BigInt bose_multiplicity(PartitionCache& cache, std::size_t n, std::size_t n_ex, std::size_t N) {
  check_excited_count(n_ex, N, "bose_multiplicity");
  if (n < n_ex) return 0;
  return cache.table(n - n_ex, n_ex)->count(n - n_ex, n_ex);
}

BigInt fermi_multiplicity(PartitionCache& cache, std::size_t n, std::size_t n_ex, std::size_t N) {
  check_excited_count(n_ex, N, "fermi_multiplicity");
  const std::size_t floor_quanta = particle_min_quanta(n_ex) + hole_min_quanta(n_ex);
  if (n < floor_quanta) return 0;
  const std::size_t free_quanta = n - floor_quanta;

  const auto holes = cache.holes(N, n_ex);
  const auto table = cache.table(free_quanta, n_ex);
  // h runs over hole energies above the hole minimum; the particles carry the
  // remaining free_quanta - h above the particle minimum.
  const std::size_t h_max = std::min(holes->max_energy(), free_quanta);
  BigInt acc = 0;
  for (std::size_t h = 0; h <= h_max; ++h) {
    const BigInt& hole_ways = holes->count(h);
    const BigInt& particle_ways = table->count(free_quanta - h, n_ex);
    if (hole_ways.fits_ulong_p()) {
      mpz_addmul_ui(acc.get_mpz_t(), particle_ways.get_mpz_t(), hole_ways.get_ui());
    } else {
      mpz_addmul(acc.get_mpz_t(), particle_ways.get_mpz_t(), hole_ways.get_mpz_t());
    }
  }
  return acc;
}

MultiplicityDistribution distribution(PartitionCache& cache, std::size_t n, std::size_t N,
                                      const Statistics& statistics) {
  if (N < 1) throw DomainError("distribution needs N >= 1");
  MultiplicityDistribution d;
  d.n = n;
  d.N = N;
  d.statistics = statistics;
  d.omega.assign(N, BigInt(0));

  using Multiplicity = BigInt (*)(PartitionCache&, std::size_t, std::size_t, std::size_t);
  Multiplicity fill = nullptr;
  switch (statistics.kind()) {
    case StatisticsKind::bose:
      fill = &bose_multiplicity;
      break;
    case StatisticsKind::fermi:
      fill = &fermi_multiplicity;
      break;
    case StatisticsKind::fes: {
      const auto form = fes_closed_form(N, statistics.g());
      if (!form) {
        throw UnsupportedStatisticsError("no closed form for g=" + statistics.g().to_string() +
                                         " at N=" + std::to_string(N) +
                                         "; supported: " + supported_fes_forms(N));
      }
      switch (*form) {
        case FesClosedForm::bose:
          fill = &bose_multiplicity;
          break;
        case FesClosedForm::fermi:
          fill = &fermi_multiplicity;
          break;
        case FesClosedForm::near_bose:
          fill = &fes_multiplicity_near_bose;
          break;
        case FesClosedForm::near_fermi:
          fill = &fes_multiplicity_near_fermi;
          break;
      }
      break;
    }
  }
  if (n == 0) return d;
  for (std::size_t k = 1; k <= N; ++k) d.omega[k - 1] = fill(cache, n, k, N);
  return d;
}

MultiplicityDistribution distribution_or_enumerate(PartitionCache& cache, std::size_t n,
                                                   std::size_t N, const Statistics& statistics,
                                                   std::uint64_t budget) {
  if (statistics.kind() == StatisticsKind::fes && !fes_closed_form(N, statistics.g())) {
    return enumerate_fes(cache, n, N, statistics.g(), budget);
  }
  return distribution(cache, n, N, statistics);
}

MomentSums moment_sums(const MultiplicityDistribution& d) {
  MomentSums sums;
  for (std::size_t k = 1; k <= d.omega.size(); ++k) {
    const BigInt& w = d.omega[k - 1];
    sums.s0 += w;
    sums.s1 += w * k;
    sums.s2 += w * (k * k);
  }
  return sums;
}

GroundStateStats ground_state_stats(const MomentSums& sums) {
  GroundStateStats stats;
  if (sgn(sums.s0) == 0) return stats;
  stats.mean_excited = ratio(sums.s1, sums.s0);
  stats.second_moment = ratio(sums.s2, sums.s0);
  // Var = (S0 S2 - S1^2) / S0^2, formed exactly before dividing.
  const BigInt spread = sums.s0 * sums.s2 - sums.s1 * sums.s1;
  if (sgn(spread) < 0) {
    throw InternalError("negative variance numerator " + spread.get_str());
  }
  stats.fluctuation = std::sqrt(ratio(spread, sums.s0 * sums.s0));
  return stats;
}

GroundStateStats ground_state_stats(const MultiplicityDistribution& d) {
  return ground_state_stats(moment_sums(d));
}

FluctuationSeries fluctuation_sweep(PartitionCache& cache, std::size_t N,
                                    const Statistics& statistics, std::size_t n_max,
                                    std::uint64_t budget) {
  if (N < 1) throw DomainError("fluctuation sweep needs N >= 1");
  const bool enumerated =
      statistics.kind() == StatisticsKind::fes && !fes_closed_form(N, statistics.g());
  // The near-fermi form reads omega^F at n + N.
  const std::size_t table_n = n_max + N;
  const std::uint64_t cells =
      static_cast<std::uint64_t>(table_n + 1) * std::min<std::uint64_t>(N, table_n);
  if (cells > kMaxTableCells) {
    throw ResourceError("sweep to n_max=" + std::to_string(n_max) + " at N=" +
                        std::to_string(N) + " needs " + std::to_string(cells) +
                        " partition-table cells (limit " + std::to_string(kMaxTableCells) + ")");
  }
  const auto table = cache.table(table_n, N);
  if (enumerated && table->count(n_max, N) > budget) {
    throw ResourceError("enumerating omega at n=" + std::to_string(n_max) + ", N=" +
                        std::to_string(N) + " visits " + table->count(n_max, N).get_str() +
                        " partitions (budget " + std::to_string(budget) + ")");
  }

  FluctuationSeries series;
  series.N = N;
  series.statistics = statistics;
  series.rows.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto stats =
        ground_state_stats(distribution_or_enumerate(cache, n, N, statistics, budget));
    series.rows.push_back({n, stats.mean_excited, stats.fluctuation});
  }
  return series;
}

}  // namespace mcfluct
