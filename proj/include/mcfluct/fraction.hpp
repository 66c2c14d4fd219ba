#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mcfluct {

// 128-bit intermediate for cross products of 64-bit fractions.
__extension__ using WideInt = __int128;

/// Exact rational number with 64-bit numerator and positive denominator,
/// always stored in lowest terms.
///
/// Used for the exclusion parameter g and for quasiparticle energies, where
/// exact comparison matters at plateau boundaries. Arithmetic is carried out
/// in 128-bit intermediates and throws DomainError if the reduced result does
/// not fit.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Parses "p/q" or "p" (optional leading '-'). Throws InvalidArgumentError.
  static Fraction parse(std::string_view text);

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    const auto lhs = static_cast<WideInt>(a.num_) * b.den_;
    const auto rhs = static_cast<WideInt>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mcfluct
