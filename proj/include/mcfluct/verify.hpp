#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcfluct/engine.hpp"

namespace mcfluct {

enum class VerificationSuite { identities, oracle, fes, ensembles };

std::optional<VerificationSuite> parse_suite(std::string_view name);
std::string suite_name(VerificationSuite suite);

struct VerificationCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;  // empty when nothing failed

  bool passed() const noexcept { return checked > 0 && failed == 0; }
};

struct VerificationReport {
  VerificationSuite suite = VerificationSuite::identities;
  std::vector<VerificationCheck> checks;

  bool passed() const noexcept;
};

/// Runs one invariant suite on its standard grid. Failures are recorded in the
/// report, never thrown; an exception escaping a check counts as a failure.
///
///   identities  sum_{N_ex} omega = Omega(n, N) for Bose, Fermi and both FES
///               closed forms (N <= 30, 1 <= n <= 200); the Omega recurrence.
///   oracle      particle/hole pipeline vs Durfee/exact-parts enumeration
///               (N <= 8, n <= 40); hole recursion vs bounded DP (N <= 12).
///   fes         near-Fermi/near-Bose closed forms vs quasiparticle enumerator
///               (N <= 5, n <= 16); g = 0, 1 endpoints (N <= 10, n <= 50).
///   ensembles   shell mixture vs explicit Boltzmann sums (N <= 4,
///               x in {0.2, 0.5, 0.8}); interpolation and inversion checks.
VerificationReport run_verification(Engine& engine, VerificationSuite suite);

}  // namespace mcfluct
