#include "modhyp/hyperbola.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <string>

#include "modhyp/parallel.hpp"

namespace modhyp {

namespace {

void require_oracle_modulus(u64 n) {
  if (n < 2) throw InvalidArgument("hyperbola: modulus must be >= 2");
  if (n > kMaxOracleModulus) throw InvalidArgument("hyperbola: modulus too large for dense enumeration");
}

// Accumulates the signed sums of every point whose first coordinate is units[lo..hi).
// Stops early once the set covers all of Z/nZ, or another chunk did.
void accumulate_chunk(const HyperbolaSpec& spec, const UnitTable& table, std::size_t lo, std::size_t hi,
                      ResidueSet& out, const std::atomic<bool>& stop) {
  const auto units = table.units();
  const auto& bar = table.barrett();
  const u64 n = spec.n;
  auto signed_add = [n](u64 acc, u64 x, bool plus) {
    if (plus) {
      const u64 s = acc + x;
      return s >= n ? s - n : s;
    }
    return acc >= x ? acc - x : acc + n - x;
  };

  if (spec.d == 2) {
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 x = units[i];
      const u64 y = bar.mul(spec.a, table.inverse(x));
      u64 v = signed_add(0, x, spec.m >= 1);
      v = signed_add(v, y, spec.m >= 2);
      out.insert(v);
    }
    return;
  }

  // d >= 3: x_1 from the chunk, x_2..x_{d-1} odometer, x_d determined.
  const unsigned free = spec.d - 1;
  std::vector<std::size_t> idx(free, 0);
  std::vector<u64> prefix_c(free + 1);  // a * inv(x_1..x_i)
  std::vector<u64> prefix_s(free + 1);  // signed partial sums
  for (std::size_t i = lo; i < hi; ++i) {
    if (stop.load(std::memory_order_relaxed)) return;
    const u64 x1 = units[i];
    prefix_c[1] = bar.mul(spec.a, table.inverse(x1));
    prefix_s[1] = signed_add(0, x1, spec.m >= 1);
    std::fill(idx.begin(), idx.end(), 0);
    // Fill middle coordinates 2..d-2 (indices 1..free-2) from idx.
    auto refill = [&](unsigned from) {
      for (unsigned k = from; k + 1 < free; ++k) {
        const u64 x = units[idx[k]];
        prefix_c[k + 1] = bar.mul(prefix_c[k], table.inverse(x));
        prefix_s[k + 1] = signed_add(prefix_s[k], x, spec.m >= k + 1);
      }
    };
    refill(1);
    const bool plus_last_free = spec.m >= free;
    const bool plus_last = spec.m >= spec.d;
    for (;;) {
      // Innermost coordinate x_{d-1} runs over all units.
      const u64 c = prefix_c[free - 1];
      const u64 s = prefix_s[free - 1];
      for (const std::uint32_t x : units) {
        const u64 last = bar.mul(c, table.inverse(x));
        out.insert(signed_add(signed_add(s, x, plus_last_free), last, plus_last));
      }
      if (out.saturated()) return;
      int pos = static_cast<int>(free) - 2;
      while (pos >= 1 && ++idx[pos] == units.size()) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 1) break;
      refill(static_cast<unsigned>(pos));
    }
  }
}

}  // namespace

HyperbolaSpec HyperbolaSpec::make(unsigned d, unsigned m, i64 a, u64 n) {
  if (d < 2) throw InvalidArgument("hyperbola: dimension d must be >= 2");
  if (m > d) throw InvalidArgument("hyperbola: plus-sign count m must satisfy 0 <= m <= d");
  if (n < 2) throw InvalidArgument("hyperbola: modulus n must be >= 2");
  const u64 reduced = reduce(a, n);
  if (std::gcd(reduced, n) != 1)
    throw InvalidArgument("hyperbola: a = " + std::to_string(a) + " is not coprime to n = " + std::to_string(n));
  return {d, m, reduced, n};
}

UnitTable::UnitTable(u64 n) : n_(n), bar_(n) {
  require_oracle_modulus(n);
  inv_.assign(n, 0);
  for (u64 x = 1; x < n; ++x) {
    if (inv_[x] != 0) continue;
    if (std::gcd(x, n) != 1) continue;
    const u64 y = inverse_mod(x, n);
    inv_[x] = static_cast<std::uint32_t>(y);
    inv_[y] = static_cast<std::uint32_t>(x);
  }
  for (u64 x = 1; x < n; ++x)
    if (inv_[x] != 0) units_.push_back(static_cast<std::uint32_t>(x));
}

long double enumeration_cost(const HyperbolaSpec& spec) {
  return std::pow(static_cast<long double>(euler_phi(spec.n)), static_cast<long double>(spec.d - 1));
}

void check_budget(const HyperbolaSpec& spec, u64 budget) {
  const long double cost = enumeration_cost(spec);
  if (cost > static_cast<long double>(budget)) throw BudgetExceeded(cost, budget);
}

std::vector<std::vector<u64>> enumerate_points(const HyperbolaSpec& spec, u64 budget) {
  check_budget(spec, budget);
  const UnitTable table(spec.n);
  std::vector<std::vector<u64>> out;
  for_each_point(spec, table, [&](std::span<const u64> p) { out.emplace_back(p.begin(), p.end()); }, budget);
  return out;
}

ResidueSet signed_sumset(const HyperbolaSpec& spec, const EnumerationOptions& options) {
  check_budget(spec, options.budget);
  return HyperbolaOracle(spec.n).signed_sumset(spec.d, spec.m, static_cast<i64>(spec.a), options);
}

UnreducedSets unreduced_sum_diff(i64 a, u64 n, u64 budget) {
  const auto spec = HyperbolaSpec::make(2, 2, a, n);
  check_budget(spec, budget);
  const UnitTable table(n);
  std::vector<bool> sums(2 * n, false), diffs(2 * n, false);  // diffs offset by n
  for (const std::uint32_t x : table.units()) {
    const u64 y = table.barrett().mul(spec.a, table.inverse(x));
    sums[x + y] = true;
    diffs[n + x - y] = true;
  }
  UnreducedSets out;
  for (u64 v = 0; v < 2 * n; ++v) {
    if (sums[v]) out.sums.push_back(static_cast<i64>(v));
    if (diffs[v]) out.diffs.push_back(static_cast<i64>(v) - static_cast<i64>(n));
  }
  return out;
}

HyperbolaOracle::HyperbolaOracle(u64 n) : table_(n) {}

ResidueSet HyperbolaOracle::signed_sumset(unsigned d, unsigned m, i64 a, const EnumerationOptions& options) const {
  const auto spec = HyperbolaSpec::make(d, m, a, modulus());
  check_budget(spec, options.budget);
  const std::size_t count = table_.units().size();

  unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  if (d == 2) threads = 1;  // a single O(phi(n)) pass; not worth splitting
  const std::size_t chunks = threads <= 1 ? 1 : std::min<std::size_t>(count, 4 * threads);

  std::vector<ResidueSet> parts(chunks, ResidueSet(modulus()));
  std::atomic<bool> stop{false};
  parallel_chunks(0, count, chunks, threads, [&](std::size_t c, u64 lo, u64 hi) {
    accumulate_chunk(spec, table_, lo, hi, parts[c], stop);
    if (parts[c].saturated()) stop.store(true, std::memory_order_relaxed);
  });
  ResidueSet out(modulus());
  for (const auto& p : parts) out.unite(p);
  return out;
}

HyperbolaOracle::SumDiff HyperbolaOracle::sum_and_difference(i64 a) const {
  const u64 n = modulus();
  const u64 ar = reduce(a, n);
  if (std::gcd(ar, n) != 1) throw InvalidArgument("hyperbola: a is not coprime to n");
  SumDiff out{ResidueSet(n), ResidueSet(n)};
  const auto& bar = table_.barrett();
  for (const std::uint32_t x : table_.units()) {
    const u64 y = bar.mul(ar, table_.inverse(x));
    const u64 s = x + y;
    out.sums.insert(s >= n ? s - n : s);
    out.diffs.insert(x >= y ? x - y : x + n - y);
  }
  return out;
}

}  // namespace modhyp
