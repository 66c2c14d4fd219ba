#include "mcfluct/statistics.hpp"

#include "mcfluct/error.hpp"

namespace mcfluct {

Statistics Statistics::fes(Fraction g) {
  if (g < Fraction(0) || g > Fraction(1)) {
    throw DomainError("exclusion parameter g=" + g.to_string() + " outside [0, 1]");
  }
  return Statistics(StatisticsKind::fes, g);
}

Statistics Statistics::parse(std::string_view text) {
  if (text == "bose") return bose();
  if (text == "fermi") return fermi();
  constexpr std::string_view prefix = "fes:";
  if (text.starts_with(prefix)) {
    const Fraction g = Fraction::parse(text.substr(prefix.size()));
    if (g < Fraction(0) || g > Fraction(1)) {
      throw InvalidArgumentError("exclusion parameter in '" + std::string(text) +
                                 "' must lie in [0, 1]");
    }
    return fes(g);
  }
  throw InvalidArgumentError("unknown statistics '" + std::string(text) +
                             "' (expected bose, fermi, or fes:p/q)");
}

std::string Statistics::to_string() const {
  switch (kind_) {
    case StatisticsKind::bose:
      return "bose";
    case StatisticsKind::fermi:
      return "fermi";
    case StatisticsKind::fes:
      break;
  }
  return "fes:" + g_.to_string();
}

}  // namespace mcfluct
