#include "mcfluct/fraction.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "mcfluct/error.hpp"

namespace mcfluct {

namespace {

using Wide = WideInt;

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

Wide gcd_wide(Wide a, Wide b) {
  a = abs_wide(a);
  b = abs_wide(b);
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Fraction reduce(Wide num, Wide den) {
  if (den == 0) throw DomainError("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw DomainError("fraction arithmetic overflows 64-bit numerator/denominator");
  }
  return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("fraction with zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min()) {
      throw DomainError("fraction arithmetic overflows 64-bit numerator/denominator");
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw InvalidArgumentError("cannot parse rational '" + std::string(text) +
                                 "': expected p/q with integer p and q");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw InvalidArgumentError("cannot parse rational '" + std::string(text) +
                               "': zero denominator");
  }
  return Fraction(parse_int(text.substr(0, slash)), den);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return reduce(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return reduce(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return reduce(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw DomainError("division of fraction by zero");
  return reduce(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

}  // namespace mcfluct
