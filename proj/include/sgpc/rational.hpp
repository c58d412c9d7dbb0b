#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sgpc {

/// Exact fraction over 64-bit integers, always stored in lowest terms with a
/// positive denominator. Comparisons widen to 128 bits so they never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  /// Shortest exact decimal ("2.5", "0.05") when the denominator has only
  /// factors 2 and 5; otherwise falls back to "n/d".
  std::string to_decimal_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "3", "-7/4", "0.05", "2.5". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace sgpc
