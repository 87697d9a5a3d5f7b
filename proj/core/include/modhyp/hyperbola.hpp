#pragma once

// Brute-force enumeration of H_d(a;n) = { (x_1..x_d) : x_1 * ... * x_d = a (mod n), 1 <= x_i < n }
// and of its signed coordinate sumsets. This is the independent oracle the closed
// forms in cardinality.hpp are checked against.

#include <cstdint>
#include <span>
#include <vector>

#include "modhyp/arith.hpp"
#include "modhyp/errors.hpp"
#include "modhyp/residue_set.hpp"

namespace modhyp {

/// Names H_d(a;n) together with a sign pattern: the first m coordinates are added,
/// the remaining d - m subtracted. m = 0 (all minus) is accepted as an extension.
struct HyperbolaSpec {
  unsigned d = 2;
  unsigned m = 2;
  u64 a = 1;  // reduced into [1, n)
  u64 n = 2;

  static HyperbolaSpec make(unsigned d, unsigned m, i64 a, u64 n);

  friend bool operator==(const HyperbolaSpec&, const HyperbolaSpec&) = default;
};

inline constexpr u64 kDefaultBudget = 100'000'000;
inline constexpr u64 kMaxOracleModulus = 0xFFFFFFFFULL;

struct EnumerationOptions {
  u64 budget = kDefaultBudget;  // max number of (d-1)-tuples visited
  unsigned threads = 1;         // 0 = default_threads()
};

/// Units of Z/nZ in ascending order with a modular-inverse lookup table.
class UnitTable {
 public:
  explicit UnitTable(u64 n);

  u64 modulus() const noexcept { return n_; }
  std::span<const std::uint32_t> units() const noexcept { return units_; }
  /// x^-1 mod n, or 0 when x is not a unit.
  std::uint32_t inverse(u64 x) const noexcept { return inv_[x]; }
  const Barrett& barrett() const noexcept { return bar_; }

 private:
  u64 n_;
  Barrett bar_;
  std::vector<std::uint32_t> units_;
  std::vector<std::uint32_t> inv_;
};

/// phi(n)^(d-1): the number of tuples an exhaustive pass visits.
long double enumeration_cost(const HyperbolaSpec& spec);

/// Throws BudgetExceeded when enumeration_cost(spec) > budget.
void check_budget(const HyperbolaSpec& spec, u64 budget);

/// Calls visit(std::span<const u64>) for every point of H_d(a;n), lexicographic in
/// (x_1..x_{d-1}); x_d is a * (x_1 ... x_{d-1})^-1.
template <typename Visit>
void for_each_point(const HyperbolaSpec& spec, const UnitTable& table, Visit&& visit, u64 budget = kDefaultBudget) {
  check_budget(spec, budget);
  const auto units = table.units();
  const auto& bar = table.barrett();
  const unsigned free = spec.d - 1;
  std::vector<std::size_t> idx(free, 0);
  std::vector<u64> point(spec.d);
  std::vector<u64> prefix(spec.d);  // prefix[i] = a * inv(x_1 .. x_i)
  prefix[0] = spec.a;
  if (units.empty()) return;
  for (unsigned i = 0; i < free; ++i) {
    point[i] = units[0];
    prefix[i + 1] = bar.mul(prefix[i], table.inverse(point[i]));
  }
  for (;;) {
    point[free] = prefix[free];
    visit(std::span<const u64>(point));
    int pos = static_cast<int>(free) - 1;
    while (pos >= 0 && ++idx[pos] == units.size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
    for (unsigned i = static_cast<unsigned>(pos); i < free; ++i) {
      point[i] = units[idx[i]];
      prefix[i + 1] = bar.mul(prefix[i], table.inverse(point[i]));
    }
  }
}

/// Collect mode: every point of H_d(a;n), in enumeration order.
std::vector<std::vector<u64>> enumerate_points(const HyperbolaSpec& spec, u64 budget = kDefaultBudget);

/// The reduced signed sumset { x_1 + .. + x_m - x_{m+1} - .. - x_d mod n }.
ResidueSet signed_sumset(const HyperbolaSpec& spec, const EnumerationOptions& options = {});

struct UnreducedSets {
  std::vector<i64> sums;   // ascending, within [2, 2n-2]
  std::vector<i64> diffs;  // ascending, within [-(n-2), n-2]
};

/// Integer (unreduced) S_2(a;n) and D_2(a;n).
UnreducedSets unreduced_sum_diff(i64 a, u64 n, u64 budget = kDefaultBudget);

/// Oracle bound to one modulus; reuses the unit/inverse table across many a.
class HyperbolaOracle {
 public:
  explicit HyperbolaOracle(u64 n);

  u64 modulus() const noexcept { return table_.modulus(); }
  const UnitTable& table() const noexcept { return table_; }

  ResidueSet signed_sumset(unsigned d, unsigned m, i64 a, const EnumerationOptions& options = {}) const;

  struct SumDiff {
    ResidueSet sums;   // S_2(a;n) reduced
    ResidueSet diffs;  // D_2(a;n) reduced
  };
  /// Both planar sets from a single pass over H_2(a;n).
  SumDiff sum_and_difference(i64 a) const;

 private:
  UnitTable table_;
};

}  // namespace modhyp
