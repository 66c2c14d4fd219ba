#pragma once

#include <string>
#include <string_view>

#include "mcfluct/fraction.hpp"

namespace mcfluct {

enum class StatisticsKind { bose, fermi, fes };

/// Particle statistics: Bose, Fermi, or fractional exclusion with exact
/// rational g in [0, 1]. g = 0 and g = 1 are kept as FES (not folded into
/// Bose/Fermi) so the endpoint degeneracy can be tested.
class Statistics {
 public:
  static Statistics bose() { return Statistics(StatisticsKind::bose, Fraction(0)); }
  static Statistics fermi() { return Statistics(StatisticsKind::fermi, Fraction(1)); }
  static Statistics fes(Fraction g);

  /// Accepts "bose", "fermi", or "fes:p/q".
  static Statistics parse(std::string_view text);

  StatisticsKind kind() const noexcept { return kind_; }
  /// Exclusion parameter; 0 for Bose and 1 for Fermi.
  const Fraction& g() const noexcept { return g_; }

  std::string to_string() const;

  friend bool operator==(const Statistics&, const Statistics&) = default;

 private:
  Statistics(StatisticsKind kind, Fraction g) : kind_(kind), g_(g) {}

  StatisticsKind kind_;
  Fraction g_;
};

}  // namespace mcfluct
