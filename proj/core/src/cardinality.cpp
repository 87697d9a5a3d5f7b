#include "modhyp/cardinality.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "modhyp/errors.hpp"

namespace modhyp {

namespace {

u64 exact_quotient(i128 num, i128 den, const char* what, bool allow_zero = false) {
  if (den == 0 || num % den != 0 || num / den < (allow_zero ? 0 : 1))
    throw InvariantViolation(std::string("closed form for ") + what + " is not a positive integer");
  return static_cast<u64>(num / den);
}

void require_coprime(i64 a, u64 p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (reduce(a, p) == 0) throw InvalidArgument("a = " + std::to_string(a) + " is not coprime to p = " + std::to_string(p));
}

// |S_2(a;2^t)| keyed on a mod 8.
u64 sum_count_p2(u64 a_mod8, unsigned t) {
  if (t <= 3) return (t == 3 && a_mod8 % 4 == 1) ? 2 : 1;
  if (t == 4) return 2;
  const i128 pow_t4 = static_cast<i128>(checked_pow(2, t - 4));
  switch (a_mod8) {
    case 1: {
      // 2^(t-4)/3 + (-1)^(t-1)/3 + 3
      const i128 sign = (t % 2 == 1) ? 1 : -1;
      return exact_quotient(pow_t4 + sign + 9, 3, "S_2(a;2^t), a = 1 mod 8");
    }
    case 3:
    case 7:
      return static_cast<u64>(2 * pow_t4);
    case 5:
      return static_cast<u64>(pow_t4);
    default:
      throw InvalidArgument("a must be odd for p = 2");
  }
}

// Numerator over 2(p+1) of (p-3)p^(t-1)/2 + p^(t-1)/(p+1) + 3/2 + (-1)^(t-1)(p-1)/(2(p+1)).
u64 odd_p_large_branch(u64 p, unsigned t) {
  const i128 pi = p;
  const i128 pt1 = checked_pow(p, t - 1);
  const i128 sign = (t % 2 == 1) ? 1 : -1;
  const i128 num = (pi - 3) * pt1 * (pi + 1) + 2 * pt1 + 3 * (pi + 1) + sign * (pi - 1);
  return exact_quotient(num, 2 * (pi + 1), "S_2(a;p^t), (a/p) = 1");
}

u64 odd_p_half_phi(u64 p, unsigned t) { return exact_quotient(static_cast<i128>(checked_pow(p, t - 1)) * (p - 1), 2, "phi(p^t)/2"); }

Method planar_method(u64 p, unsigned t) {
  if (p != 2) return Method::closed_form_odd_p;
  return t <= 4 ? Method::small_power_table : Method::closed_form_p2;
}

// Callers guarantee p prime, t >= 1 and p not dividing a.
u64 card_trusted(i64 a, u64 p, unsigned t, SetKind kind) {
  if (p == 2) {
    // D_2(a;2^t) = S_2(-a;2^t).
    const u64 a8 = reduce(kind == SetKind::sum ? a : -a, 8);
    return sum_count_p2(a8, t);
  }
  const int chi = jacobi(reduce(a, p), p);
  bool large;
  if (kind == SetKind::sum || p % 4 == 1)
    large = chi == 1;
  else
    large = chi == -1;  // p = 3 mod 4: D_2(a) = S_2(-a) and (-1/p) = -1
  return large ? odd_p_large_branch(p, t) : odd_p_half_phi(p, t);
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form_p2: return "closed-form-p2";
    case Method::closed_form_odd_p: return "closed-form-odd-p";
    case Method::small_power_table: return "small-power-table";
    case Method::full_coverage: return "full-coverage-d>2";
    case Method::oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(SetKind k) { return k == SetKind::sum ? "sum" : "difference"; }

u64 card_S2_pp(i64 a, u64 p, unsigned t, SetKind kind) {
  if (t == 0) throw InvalidArgument("card_S2_pp: exponent must be >= 1");
  require_coprime(a, p);
  return card_trusted(a, p, t, kind);
}

S2Components card_S2_components(i64 a, u64 p, unsigned t) {
  if (p == 2) throw Unsupported("card_S2_components: S' and S'' are defined for odd p only");
  if (t == 0) throw InvalidArgument("card_S2_components: exponent must be >= 1");
  require_coprime(a, p);
  const u64 pt1 = checked_pow(p, t - 1);
  if (legendre(a, p) == -1) return {exact_quotient(static_cast<i128>(p - 1) * pt1, 2, "S'"), 0};
  const i128 pi = p;
  const i128 sign = (t % 2 == 1) ? 1 : -1;
  // p^(t-1)/(p+1) + 3/2 + (-1)^(t-1)(p-1)/(2(p+1)), over 2(p+1)
  const u64 spp = exact_quotient(2 * static_cast<i128>(pt1) + 3 * (pi + 1) + sign * (pi - 1), 2 * (pi + 1), "S''");
  // p = 3 leaves S' empty.
  return {exact_quotient(static_cast<i128>(p - 3) * pt1, 2, "S'", true), spp};
}

PartialResult::PartialResult(const BudgetExceeded& cause, CardinalityReport partial, std::vector<PrimePower> missing)
    : BudgetExceeded(cause), partial_(std::move(partial)), missing_(std::move(missing)) {}

CardinalityReport card_signed_sumset(const HyperbolaSpec& spec, const EnumerationOptions& options) {
  const auto f = factorize(spec.n);
  CardinalityReport report{spec, {}, 1};
  std::vector<PrimePower> missing;
  std::optional<BudgetExceeded> cause;

  for (const auto& [p, t] : f.factors()) {
    const u64 q = checked_pow(p, t);
    const i64 a_local = static_cast<i64>(spec.a % q);
    FactorCount fc{p, t, 0, Method::oracle};
    if (spec.d == 2) {
      // m = 0 gives -S_2, same size as S_2.
      const SetKind kind = spec.m == 1 ? SetKind::difference : SetKind::sum;
      fc.count = card_S2_pp(a_local, p, t, kind);
      fc.method = planar_method(p, t);
    } else if (p > 7) {
      fc.count = q;
      fc.method = Method::full_coverage;
    } else {
      const auto local = HyperbolaSpec::make(spec.d, spec.m, a_local, q);
      try {
        fc.count = signed_sumset(local, options).size();
      } catch (const BudgetExceeded& e) {
        if (!cause) cause.emplace(e);
        missing.push_back({p, t});
        continue;
      }
    }
    report.per_factor.push_back(fc);
    report.total *= fc.count;
  }
  if (!missing.empty()) throw PartialResult(*cause, std::move(report), std::move(missing));
  return report;
}

RatioValue ratio_c2(i64 a, u64 n) {
  const auto spec = HyperbolaSpec::make(2, 2, a, n);
  RatioValue out;
  const auto f = factorize(n);
  for (const auto& [p, t] : f.factors()) {
    const i64 a_local = static_cast<i64>(spec.a % checked_pow(p, t));
    out.numerator *= card_trusted(a_local, p, t, SetKind::sum);
    out.denominator *= card_trusted(a_local, p, t, SetKind::difference);
  }
  out.value = Rational(out.numerator, out.denominator);
  return out;
}

Rational factor_ratio(i64 a, u64 p, unsigned t) {
  return Rational(card_S2_pp(a, p, t, SetKind::sum), card_S2_pp(a, p, t, SetKind::difference));
}

Rational factor_ratio(i64 a, const PrimePower& pp) {
  if (reduce(a, pp.p) == 0) throw InvalidArgument("a = " + std::to_string(a) + " is not coprime to p = " + std::to_string(pp.p));
  return Rational(card_trusted(a, pp.p, pp.e, SetKind::sum), card_trusted(a, pp.p, pp.e, SetKind::difference));
}

Rational ratio_from_factors(i64 a, const PrimeFactorization& factors) {
  Rational r{1};
  for (const auto& pp : factors.factors()) r *= factor_ratio(a, pp);
  return r;
}

}  // namespace modhyp
