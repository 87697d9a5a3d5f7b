#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modhyp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition was violated (bad modulus, non-coprime input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested operation is outside the supported hypothesis (e.g. p <= 7 for the solver).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Should never surface for valid inputs.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic would leave the 64/128-bit range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would visit more tuples than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(long double required, std::uint64_t budget)
      : Error("enumeration too large: phi(n)^(d-1) = " + format_count(required) +
              " tuples exceeds budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  long double required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  static std::string format_count(long double v) {
    if (v < 1e18L) return std::to_string(static_cast<std::uint64_t>(v));
    return std::to_string(static_cast<double>(v));
  }

  long double required_;
  std::uint64_t budget_;
};

}  // namespace modhyp
