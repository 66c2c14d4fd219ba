#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mcfluct/microcanonical.hpp"
#include "mcfluct/partitions.hpp"
#include "mcfluct/statistics.hpp"

// Brute-force validators. Everything here is exponential in n by nature and
// meant for desk-scale cross-checks of the closed-form pipeline.

namespace mcfluct {

/// A partition lambda_1 >= lambda_2 >= ... > 0 of total.
struct PartitionShape {
  std::vector<std::uint32_t> parts;
  std::uint64_t total = 0;
};

/// Calls visit(shape) for every partition of n into at most max_parts parts,
/// exactly once each, in decreasing lexicographic order ({2} before {1,1}).
/// The shape reference is only valid during the call.
void for_each_partition(std::size_t n, std::size_t max_parts,
                        const std::function<void(const PartitionShape&)>& visit);

std::vector<PartitionShape> enumerate_partitions(std::size_t n, std::size_t max_parts);

/// Side of the Durfee square: max{s : lambda_s >= s}, 0 for the empty partition.
/// Applied as level shifts to the top fermions of an N-fermion ground state,
/// particle s from the top ends above the Fermi level iff lambda_s >= s, so
/// this is the number of excited fermions.
std::size_t durfee_side(const PartitionShape& shape);

/// Tallies omega(n, ., N) by classifying every partition of n into at most N
/// parts: Bose by the number of nonzero parts, Fermi by the Durfee side, FES
/// by the quasiparticle rule. ResourceError if Omega(n, N) exceeds budget.
MultiplicityDistribution oracle_multiplicities(PartitionCache& cache, std::size_t n,
                                               std::size_t N, const Statistics& statistics,
                                               std::uint64_t budget);

/// Canonical moments from an explicit Boltzmann sum over occupation-number
/// microstates (fermions: N distinct levels; bosons: N levels with repeats),
/// truncated at excitation energy max_excitation. Only Bose and Fermi.
struct BoltzmannMoments {
  double partition_sum = 0.0;
  double mean_excitation = 0.0;
  double mean_excited = 0.0;
  double variance = 0.0;
};

BoltzmannMoments brute_force_canonical(double x, std::size_t N, const Statistics& statistics,
                                       std::size_t max_excitation);

}  // namespace mcfluct
