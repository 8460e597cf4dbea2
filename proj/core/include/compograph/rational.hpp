#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace compograph {

// Non-negative exact fraction, always held in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;

  constexpr Rational(std::uint64_t numerator, std::uint64_t denominator)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr std::uint64_t numerator() const noexcept { return num_; }
  constexpr std::uint64_t denominator() const noexcept { return den_; }

  constexpr bool is_one() const noexcept { return num_ == den_; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }

  // `p/q`, or just `p` when the denominator is 1.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    // Operands here are cardinalities, far below overflow range.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace compograph
