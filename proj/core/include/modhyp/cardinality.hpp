#pragma once

// Closed-form sizes of the reduced planar sumset S_2(a;p^t) and difference set
// D_2(a;p^t), CRT-multiplicative composition for arbitrary n, and c_2(a;n).

#include <string_view>
#include <vector>

#include "modhyp/arith.hpp"
#include "modhyp/hyperbola.hpp"
#include "modhyp/rational.hpp"

namespace modhyp {

enum class SetKind { sum, difference };

enum class Method {
  closed_form_p2,     // p = 2, t >= 5
  closed_form_odd_p,  // p > 2
  small_power_table,  // p = 2, t <= 4
  full_coverage,      // d > 2, p > 7: every residue attained
  oracle,             // exhaustive enumeration at this prime power
};

std::string_view to_string(Method m);
std::string_view to_string(SetKind k);

/// |S_2(a;p^t)| (kind = sum) or |D_2(a;p^t)| (kind = difference).
u64 card_S2_pp(i64 a, u64 p, unsigned t, SetKind kind);

struct S2Components {
  u64 s_prime = 0;        // k with k^2 - a a square not divisible by p
  u64 s_doubleprime = 0;  // k with k^2 - a a square divisible by p
};

/// Split of the odd-p sumset count; s_prime + s_doubleprime == card_S2_pp(a, p, t, sum).
S2Components card_S2_components(i64 a, u64 p, unsigned t);

struct FactorCount {
  u64 p = 0;
  unsigned t = 0;
  u64 count = 0;
  Method method = Method::oracle;

  friend bool operator==(const FactorCount&, const FactorCount&) = default;
};

struct CardinalityReport {
  HyperbolaSpec spec;
  std::vector<FactorCount> per_factor;
  u64 total = 1;
};

/// Thrown when some prime powers need the oracle but exceed the budget.
/// partial() holds every factor that could be computed.
class PartialResult : public BudgetExceeded {
 public:
  PartialResult(const BudgetExceeded& cause, CardinalityReport partial, std::vector<PrimePower> missing);

  const CardinalityReport& partial() const noexcept { return partial_; }
  const std::vector<PrimePower>& missing() const noexcept { return missing_; }

 private:
  CardinalityReport partial_;
  std::vector<PrimePower> missing_;
};

/// |S_d(m;a;n)| as a product over the prime powers of n, recording how each factor was obtained.
CardinalityReport card_signed_sumset(const HyperbolaSpec& spec, const EnumerationOptions& options = {});

struct RatioValue {
  u64 numerator = 1;    // |S_2(a;n)|
  u64 denominator = 1;  // |D_2(a;n)|
  Rational value{1};
};

/// c_2(a;n) = |S_2(a;n)| / |D_2(a;n)| from closed forms.
RatioValue ratio_c2(i64 a, u64 n);

/// c_2(a;p^t) as an exact rational.
Rational factor_ratio(i64 a, u64 p, unsigned t);

/// c_2(a;p^t) for a prime power taken from a PrimeFactorization (p not re-validated).
Rational factor_ratio(i64 a, const PrimePower& pp);

/// c_2(a;n) for n given by its factorization; the product of per-prime-power ratios.
Rational ratio_from_factors(i64 a, const PrimeFactorization& factors);

}  // namespace modhyp
