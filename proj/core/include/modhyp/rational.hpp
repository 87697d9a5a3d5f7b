#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "modhyp/arith.hpp"

namespace modhyp {

/// Exact non-negative-denominator rational on 128-bit integers, always in lowest terms.
/// Multiplication reduces crosswise before multiplying and throws ArithmeticOverflow
/// rather than wrapping. Comparison never overflows.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i128 num, i128 den = 1);

  i128 num() const noexcept { return num_; }
  i128 den() const noexcept { return den_; }

  Rational reciprocal() const;
  long double to_long_double() const noexcept;
  double to_double() const noexcept { return static_cast<double>(to_long_double()); }

  /// "num/den" (denominator always written, e.g. "1/1").
  std::string to_string() const;
  /// Accepts "num/den" or a bare integer.
  static Rational parse(std::string_view text);

  friend Rational operator*(const Rational& l, const Rational& r);
  friend Rational operator/(const Rational& l, const Rational& r) { return l * r.reciprocal(); }
  friend Rational operator+(const Rational& l, const Rational& r);
  friend Rational operator-(const Rational& l, const Rational& r);
  Rational& operator*=(const Rational& r) { return *this = *this * r; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r);

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

std::string to_string(i128 v);

/// Fixed-point decimal with `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace modhyp
