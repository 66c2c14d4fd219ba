#include "mcfluct/oracle.hpp"

#include <algorithm>
#include <string>

#include "mcfluct/error.hpp"
#include "mcfluct/fes.hpp"

namespace mcfluct {

namespace {

void extend_partition(PartitionShape& shape, std::size_t remaining, std::size_t max_part,
                      std::size_t parts_left,
                      const std::function<void(const PartitionShape&)>& visit) {
  if (remaining == 0) {
    visit(shape);
    return;
  }
  if (parts_left == 0) return;
  const std::size_t top = std::min(max_part, remaining);
  // Parts are non-increasing, so the rest fits only if parts_left * part >= remaining.
  for (std::size_t part = top; part >= 1 && part * parts_left >= remaining; --part) {
    shape.parts.push_back(static_cast<std::uint32_t>(part));
    extend_partition(shape, remaining - part, part, parts_left - 1, visit);
    shape.parts.pop_back();
  }
}

struct Accumulator {
  long double z = 0;
  long double energy = 0;
  long double m1 = 0;
  long double m2 = 0;

  void add(long double weight, std::size_t excitation, std::size_t excited) {
    z += weight;
    energy += weight * static_cast<long double>(excitation);
    m1 += weight * static_cast<long double>(excited);
    m2 += weight * static_cast<long double>(excited * excited);
  }
};

// Fermions: strictly increasing levels k_1 < ... < k_N (ground state k_i = i).
// Particle i carries shift k_i - i, which is non-decreasing in i.
void walk_fermions(std::size_t i, std::size_t N, std::size_t prev_level, std::size_t excitation,
                   std::size_t excited, std::size_t max_excitation,
                   const std::vector<long double>& powers, Accumulator& acc) {
  if (i > N) {
    acc.add(powers[excitation], excitation, excited);
    return;
  }
  for (std::size_t level = std::max(prev_level + 1, i);; ++level) {
    const std::size_t shift = level - i;
    if (excitation + shift * (N - i + 1) > max_excitation) break;
    walk_fermions(i + 1, N, level, excitation + shift, excited + (level > N ? 1 : 0),
                  max_excitation, powers, acc);
  }
}

// Bosons: non-decreasing levels l_1 <= ... <= l_N >= 0 (ground state all 0).
void walk_bosons(std::size_t i, std::size_t N, std::size_t prev_level, std::size_t excitation,
                 std::size_t excited, std::size_t max_excitation,
                 const std::vector<long double>& powers, Accumulator& acc) {
  if (i > N) {
    acc.add(powers[excitation], excitation, excited);
    return;
  }
  for (std::size_t level = prev_level;; ++level) {
    if (excitation + level * (N - i + 1) > max_excitation) break;
    walk_bosons(i + 1, N, level, excitation + level, excited + (level > 0 ? 1 : 0),
                max_excitation, powers, acc);
  }
}

}  // namespace

void for_each_partition(std::size_t n, std::size_t max_parts,
                        const std::function<void(const PartitionShape&)>& visit) {
  PartitionShape shape;
  shape.total = n;
  shape.parts.reserve(std::min(n, max_parts));
  extend_partition(shape, n, n, max_parts, visit);
}

std::vector<PartitionShape> enumerate_partitions(std::size_t n, std::size_t max_parts) {
  std::vector<PartitionShape> out;
  for_each_partition(n, max_parts, [&](const PartitionShape& p) { out.push_back(p); });
  return out;
}

std::size_t durfee_side(const PartitionShape& shape) {
  std::size_t side = 0;
  while (side < shape.parts.size() && shape.parts[side] >= side + 1) ++side;
  return side;
}

MultiplicityDistribution oracle_multiplicities(PartitionCache& cache, std::size_t n,
                                               std::size_t N, const Statistics& statistics,
                                               std::uint64_t budget) {
  if (N < 1) throw DomainError("oracle_multiplicities needs N >= 1");
  if (statistics.kind() == StatisticsKind::fes) {
    auto d = enumerate_fes(cache, n, N, statistics.g(), budget);
    d.statistics = statistics;
    return d;
  }
  const BigInt& states = cache.table(n, N)->count(n, N);
  if (states > budget) {
    throw ResourceError("oracle enumeration at n=" + std::to_string(n) + ", N=" +
                        std::to_string(N) + " visits " + states.get_str() +
                        " partitions (budget " + std::to_string(budget) + ")");
  }
  const bool fermi = statistics.kind() == StatisticsKind::fermi;
  std::vector<std::uint64_t> tally(N + 1, 0);
  for_each_partition(n, N, [&](const PartitionShape& shape) {
    ++tally[fermi ? durfee_side(shape) : shape.parts.size()];
  });
  MultiplicityDistribution d;
  d.n = n;
  d.N = N;
  d.statistics = statistics;
  d.omega.reserve(N);
  for (std::size_t k = 1; k <= N; ++k) d.omega.emplace_back(static_cast<unsigned long>(tally[k]));
  return d;
}

BoltzmannMoments brute_force_canonical(double x, std::size_t N, const Statistics& statistics,
                                       std::size_t max_excitation) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("brute_force_canonical needs 0 < x < 1");
  if (N < 1) throw DomainError("brute_force_canonical needs N >= 1");
  std::vector<long double> powers(max_excitation + 1);
  powers[0] = 1.0L;
  for (std::size_t e = 1; e <= max_excitation; ++e) powers[e] = powers[e - 1] * x;

  Accumulator acc;
  switch (statistics.kind()) {
    case StatisticsKind::fermi:
      walk_fermions(1, N, 0, 0, 0, max_excitation, powers, acc);
      break;
    case StatisticsKind::bose:
      walk_bosons(1, N, 0, 0, 0, max_excitation, powers, acc);
      break;
    case StatisticsKind::fes:
      throw UnsupportedStatisticsError("brute-force Boltzmann sums cover bose and fermi only");
  }
  BoltzmannMoments out;
  out.partition_sum = static_cast<double>(acc.z);
  const long double mean = acc.m1 / acc.z;
  out.mean_excitation = static_cast<double>(acc.energy / acc.z);
  out.mean_excited = static_cast<double>(mean);
  out.variance = static_cast<double>(acc.m2 / acc.z - mean * mean);
  return out;
}

}  // namespace mcfluct
