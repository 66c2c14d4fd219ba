#include "mcfluct/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"

namespace mcfluct {

namespace {

double log_of(const BigInt& value) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double mpz_ratio(const BigInt& num, const BigInt& den) {
  mpf_class q(num, 128);
  q /= mpf_class(den, 128);
  return q.get_d();
}

// log of an upper bound on sum_{m > n} Omega(m, N) x^m. Omega(m, N) counts
// N-sets of distinct non-negative integers summing to M = m + N(N-1)/2, so
// N! Omega(m, N) <= C(M + N - 1, N - 1). Successive ratios of that bound,
// (M + N)/(M + 1), decrease with m, which gives a geometric majorant.
double log_tail_bound(std::size_t n, std::size_t N, double log_x) {
  const double size = static_cast<double>(N);
  const double M = static_cast<double>(n + 1) + size * (size - 1) / 2;
  const double rho = std::exp(log_x) * (M + size) / (M + 1);
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_binom = std::lgamma(M + size) - std::lgamma(size) - std::lgamma(M + 1);
  return log_binom - std::lgamma(size + 1) + static_cast<double>(n + 1) * log_x -
         std::log1p(-rho);
}

}  // namespace

CanonicalEnsemble::CanonicalEnsemble(PartitionCache& cache, std::size_t N, Statistics statistics)
    : cache_(cache), N_(N), statistics_(std::move(statistics)) {
  if (N_ < 1) throw DomainError("canonical ensemble needs N >= 1");
  if (statistics_.kind() == StatisticsKind::fes && !fes_closed_form(N_, statistics_.g())) {
    throw UnsupportedStatisticsError("canonical shells need a closed form; g=" +
                                     statistics_.g().to_string() + " at N=" +
                                     std::to_string(N_) + " is not one of " +
                                     supported_fes_forms(N_));
  }
}

std::size_t CanonicalEnsemble::last_shell_count() const {
  std::lock_guard lock(mutex_);
  return last_shell_count_;
}

void CanonicalEnsemble::extend_shells(std::size_t count) {
  if (count <= shells_.size()) return;
  const std::size_t target = std::max({count, 2 * shells_.size(), std::size_t{64}});
  const std::size_t table_n = target + N_;
  const std::uint64_t cells =
      static_cast<std::uint64_t>(table_n + 1) * std::min<std::uint64_t>(N_, table_n);
  if (cells > kMaxTableCells) {
    throw ResourceError("canonical series at N=" + std::to_string(N_) + " needs shells up to n=" +
                        std::to_string(target) + " (" + std::to_string(cells) +
                        " partition-table cells, limit " + std::to_string(kMaxTableCells) + ")");
  }
  const auto table = cache_.table(table_n, N_);
  shells_.reserve(target);
  for (std::size_t n = shells_.size(); n < target; ++n) {
    const MomentSums sums = moment_sums(distribution(cache_, n, N_, statistics_));
    Shell shell{log_of(table->count(n, N_)), 0.0, 0.0};
    if (sgn(sums.s0) != 0) {
      shell.mean = mpz_ratio(sums.s1, sums.s0);
      shell.variance = mpz_ratio(sums.s0 * sums.s2 - sums.s1 * sums.s1, sums.s0 * sums.s0);
    }
    shells_.push_back(shell);
  }
}

ThermalPoint CanonicalEnsemble::at(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("canonical series needs 0 < x < 1, got x=" + std::to_string(x));
  }
  std::lock_guard lock(mutex_);
  const double log_x = std::log(x);

  // Pass 1: find where the tail bound drops below tolerance, tracking the
  // accumulated weight as a running log-sum-exp.
  double peak = -std::numeric_limits<double>::infinity();
  double scaled = 0.0;  // sum exp(lw - peak)
  std::size_t count = 0;
  for (std::size_t n = 0;; ++n) {
    extend_shells(n + 1);
    const double lw = shells_[n].log_weight + static_cast<double>(n) * log_x;
    if (lw > peak) {
      scaled = scaled * std::exp(peak - lw) + 1.0;
      peak = lw;
    } else {
      scaled += std::exp(lw - peak);
    }
    const double log_total = peak + std::log(scaled);
    if (log_tail_bound(n, N_, log_x) < std::log(kSeriesTolerance) + log_total) {
      count = n + 1;
      break;
    }
  }
  last_shell_count_ = count;

  // Pass 2: mixture moments. The variance is accumulated as within-shell
  // variance plus spread of shell means, which avoids <N^2> - <N>^2.
  std::vector<double> weight(count);
  double total = 0.0;
  double mean = 0.0;
  double energy = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    weight[n] = std::exp(shells_[n].log_weight + static_cast<double>(n) * log_x - peak);
    total += weight[n];
    mean += weight[n] * shells_[n].mean;
    energy += weight[n] * static_cast<double>(n);
  }
  mean /= total;
  double variance = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    const double offset = shells_[n].mean - mean;
    variance += weight[n] * (shells_[n].variance + offset * offset);
  }
  variance /= total;

  ThermalPoint point;
  point.x = x;
  point.mean_excitation = energy / total;
  point.ce_stats.mean_excited = mean;
  point.ce_stats.second_moment = variance + mean * mean;
  point.ce_stats.fluctuation = std::sqrt(variance);
  return point;
}

double mean_excitation(double x, std::size_t N) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("mean excitation needs 0 < x < 1, got x=" + std::to_string(x));
  }
  const double beta = -std::log(x);
  double sum = 0.0;
  for (std::size_t j = 1; j <= N; ++j) {
    const double jb = static_cast<double>(j) * beta;
    sum += static_cast<double>(j) / std::expm1(jb);
  }
  return sum;
}

ThermalPoint ce_stats_at(PartitionCache& cache, double x, std::size_t N,
                         const Statistics& statistics) {
  CanonicalEnsemble ensemble(cache, N, statistics);
  return ensemble.at(x);
}

FesCanonicalFluctuation ce_fluctuation_fes(CanonicalEnsemble& fermi, CanonicalEnsemble& bose,
                                           double x, const Fraction& g) {
  if (g < Fraction(0) || g > Fraction(1)) {
    throw DomainError("exclusion parameter g=" + g.to_string() + " outside [0, 1]");
  }
  if (fermi.statistics() != Statistics::fermi() || bose.statistics() != Statistics::bose() ||
      fermi.N() != bose.N()) {
    throw DomainError("ce_fluctuation_fes needs Fermi and Bose ensembles of equal N");
  }
  FesCanonicalFluctuation out;
  const double fermi_var = fermi.at(x).ce_stats.variance();
  const double bose_var = bose.at(x).ce_stats.variance();
  if (g == Fraction(1)) {
    out.variance = fermi_var;
  } else if (g == Fraction(0)) {
    out.variance = bose_var;
  } else {
    const double weight = g.to_double();
    out.variance = weight * fermi_var + (1.0 - weight) * bose_var;
  }
  out.fluctuation = std::sqrt(out.variance);
  return out;
}

FesCanonicalFluctuation ce_fluctuation_fes(PartitionCache& cache, double x, std::size_t N,
                                           const Fraction& g) {
  CanonicalEnsemble fermi(cache, N, Statistics::fermi());
  CanonicalEnsemble bose(cache, N, Statistics::bose());
  return ce_fluctuation_fes(fermi, bose, x, g);
}

double invert_mean_excitation(double target_n, std::size_t N, const Statistics&) {
  if (N < 1) throw DomainError("invert_mean_excitation needs N >= 1");
  if (!(target_n > 0.0) || !std::isfinite(target_n)) {
    throw DomainError("invert_mean_excitation needs a finite target_n > 0");
  }
  constexpr double x_ceiling = 1.0 - 1e-12;
  const double tolerance = 1e-9 * std::max(1.0, target_n);

  // <n> decreases in beta = -log x; bracket in beta and bisect geometrically.
  double beta_lo = -std::log1p(-1e-12);
  auto excitation_at = [N](double beta) {
    double sum = 0.0;
    for (std::size_t j = 1; j <= N; ++j) {
      sum += static_cast<double>(j) / std::expm1(static_cast<double>(j) * beta);
    }
    return sum;
  };
  if (excitation_at(beta_lo) < target_n - tolerance) {
    throw RangeError("mean excitation " + std::to_string(target_n) + " at N=" +
                     std::to_string(N) + " is not reached below x=" + std::to_string(x_ceiling));
  }
  double beta_hi = 1.0;
  while (excitation_at(beta_hi) > target_n) beta_hi *= 2.0;

  for (int iteration = 0; iteration < 2000; ++iteration) {
    const double mid = std::sqrt(beta_lo * beta_hi);
    if (!(mid > beta_lo) || !(mid < beta_hi)) break;
    const double value = excitation_at(mid);
    if (std::abs(value - target_n) < tolerance) return std::exp(-mid);
    if (value > target_n) {
      beta_lo = mid;
    } else {
      beta_hi = mid;
    }
  }
  const double beta = std::sqrt(beta_lo * beta_hi);
  if (std::abs(excitation_at(beta) - target_n) < tolerance) return std::exp(-beta);
  throw InternalError("bisection for mean excitation " + std::to_string(target_n) +
                      " stalled before reaching tolerance");
}

}  // namespace mcfluct
