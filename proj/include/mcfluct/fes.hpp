#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcfluct/fraction.hpp"
#include "mcfluct/microcanonical.hpp"
#include "mcfluct/oracle.hpp"
#include "mcfluct/partitions.hpp"

namespace mcfluct {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// omega^g at g = (N-2)/(N-1):
///   omega^F(n+N, n_ex, N) - omega^F(n+N, n_ex, N-1),
/// the second term being zero for n_ex = N. Defined as zero at n = 0, where
/// nothing is excited (the difference formula itself yields 1 at n_ex = 1).
/// Requires N >= 3 and 1 <= n_ex <= N. A negative difference is an
/// InternalError, never clamped.
BigInt fes_multiplicity_near_fermi(PartitionCache& cache, std::size_t n, std::size_t n_ex,
                                   std::size_t N);

/// omega^g at g = 1/(N-1):
///   omega^B(n, n_ex, N)                               n_ex < N-1
///   omega^B(n, N-1, N) + omega^B(n-1, N-1, N)         n_ex = N-1
///   omega^B(n-N, N, N)                                n_ex = N
/// with terms at negative energy taken as zero. Requires N >= 2.
BigInt fes_multiplicity_near_bose(PartitionCache& cache, std::size_t n, std::size_t n_ex,
                                  std::size_t N);

enum class FesClosedForm { bose, fermi, near_bose, near_fermi };

/// The closed form available for (N, g), if any.
std::optional<FesClosedForm> fes_closed_form(std::size_t N, const Fraction& g);

/// Human-readable list of the g values with a closed form at this N.
std::string supported_fes_forms(std::size_t N);

/// One N-fermion microstate seen through the FES quasiparticle spectrum.
struct QuasiparticleState {
  std::vector<std::uint64_t> levels;     // k_1 < ... < k_N, ground state k_i = i
  std::uint64_t excitation = 0;          // sum (k_i - i)
  std::vector<Fraction> quasi_energies;  // (k_i - 1/2) - (1-g)(i-1)
};

/// Applies the partition as level shifts to the topmost particles (largest
/// part to the top particle) of the N-fermion ground state.
QuasiparticleState quasiparticle_state(const PartitionShape& shape, std::size_t N,
                                       const Fraction& g);

/// Quasi-energy of the top particle in the ground state, (N - 1/2) - (1-g)(N-1).
Fraction fes_fermi_level(std::size_t N, const Fraction& g);

/// Number of quasiparticles strictly above the ground-state Fermi level.
std::size_t fes_excited_count(const PartitionShape& shape, std::size_t N, const Fraction& g);

/// Direct enumeration of omega^g(n, ., N) for any rational g in [0, 1].
/// ResourceError if Omega(n, N) exceeds budget.
MultiplicityDistribution enumerate_fes(PartitionCache& cache, std::size_t n, std::size_t N,
                                       const Fraction& g,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

/// {1, (N-2)/(N-1), ..., 1/(N-1), 0}, on which the Fermi level is integral.
std::vector<Fraction> discrete_g_grid(std::size_t N);

/// E^g_N(0) = g N (N-1)/2 + N/2.
Fraction fes_ground_state_energy(std::size_t N, const Fraction& g);

}  // namespace mcfluct
