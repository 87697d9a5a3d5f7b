#include "modhyp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <string>

#include "modhyp/errors.hpp"
#include "modhyp/parallel.hpp"

namespace modhyp {

namespace {

// Moduli handled per parallel block; reports inside a block are emitted in order
// once the whole block is done.
constexpr u64 kScanBlock = 1 << 16;

std::vector<u64> prime_powers_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  for (u64 p : SmallestFactorSieve(limit).primes()) {
    for (u64 q = p;; q *= p) {
      out.push_back(q);
      if (q > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename PerModulus>
VerifySummary run_sweep(const std::vector<u64>& moduli, unsigned threads, PerModulus&& per_modulus) {
  std::vector<VerifySummary> parts(moduli.size());
  parallel_chunks(0, moduli.size(), moduli.size(), threads, [&](std::size_t i, u64, u64) {
    parts[i] = per_modulus(moduli[i]);
  });
  VerifySummary out;
  for (auto& p : parts) {
    out.moduli += p.moduli;
    out.cases += p.cases;
    out.mismatches.insert(out.mismatches.end(), p.mismatches.begin(), p.mismatches.end());
  }
  return out;
}

void compare_case(VerifySummary& s, u64 n, u64 a, SetKind kind, u64 formula, u64 oracle) {
  ++s.cases;
  if (formula != oracle) s.mismatches.push_back({n, a, kind, formula, oracle});
}

}  // namespace

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::sum_dominant: return "sum-dominant";
    case Dominance::difference_dominant: return "difference-dominant";
    case Dominance::balanced: return "balanced";
  }
  return "?";
}

Dominance classify(const Rational& c2) {
  const Rational one{1};
  if (c2 > one) return Dominance::sum_dominant;
  if (c2 < one) return Dominance::difference_dominant;
  return Dominance::balanced;
}

DominanceReport dominance_report(i64 a, const PrimeFactorization& n) {
  DominanceReport r;
  r.a = a;
  r.n = n.n();
  if (std::gcd(reduce(a, n.n()), n.n()) != 1)
    throw InvalidArgument("a = " + std::to_string(a) + " is not coprime to n = " + std::to_string(n.n()));
  r.factor_breakdown.reserve(n.size());
  for (const auto& pp : n.factors()) {
    const Rational fr = factor_ratio(a, pp);
    r.factor_breakdown.push_back({pp.p, pp.e, fr});
    r.c2 *= fr;
  }
  r.classification = classify(r.c2);
  return r;
}

DominanceReport dominance_report(i64 a, u64 n) { return dominance_report(a, factorize(n)); }

ScanSummary dominance_scan(i64 a, u64 n_max, const Rational& threshold, const DominanceSink& sink, unsigned threads) {
  ScanSummary summary;
  if (n_max < 2) return summary;
  const SmallestFactorSieve sieve(n_max);
  for (u64 block_lo = 2; block_lo <= n_max; block_lo += kScanBlock) {
    const u64 block_hi = std::min(n_max + 1, block_lo + kScanBlock);
    const unsigned workers = threads == 0 ? default_threads() : threads;
    const std::size_t chunks = workers <= 1 ? 1 : 4 * workers;
    std::vector<std::vector<DominanceReport>> parts(chunks);
    std::vector<u64> skipped(chunks, 0);
    parallel_chunks(block_lo, block_hi, chunks, workers, [&](std::size_t c, u64 lo, u64 hi) {
      auto& out = parts[c];
      out.reserve(hi - lo);
      for (u64 n = lo; n < hi; ++n) {
        if (std::gcd(reduce(a, n), n) != 1) {
          ++skipped[c];
          continue;
        }
        DominanceReport r;
        r.a = a;
        r.n = n;
        const auto f = sieve.factorize(n);
        r.factor_breakdown.reserve(f.size());
        for (const auto& pp : f.factors()) {
          const Rational fr = factor_ratio(a, pp);
          r.factor_breakdown.push_back({pp.p, pp.e, fr});
          r.c2 *= fr;
        }
        r.classification = classify(r.c2);
        out.push_back(std::move(r));
      }
    });
    for (std::size_t c = 0; c < parts.size(); ++c) {
      summary.skipped += skipped[c];
      for (const auto& r : parts[c]) {
        ++summary.reported;
        if (r.c2 > threshold) ++summary.above_threshold;
        sink(r);
      }
    }
  }
  return summary;
}

std::vector<DominanceReport> dominance_scan(i64 a, u64 n_max, const Rational& threshold, unsigned threads,
                                            ScanSummary* summary) {
  std::vector<DominanceReport> out;
  const auto s = dominance_scan(a, n_max, threshold, [&](const DominanceReport& r) { out.push_back(r); }, threads);
  if (summary) *summary = s;
  return out;
}

Rational k_a_constant(i64 a) {
  const u64 r = reduce(a, 8);
  if (r % 2 == 0) return Rational{1};
  if (r == 1) return Rational{63, 64};
  if (r == 5) return Rational{31, 32};
  return Rational{15, 16};  // a = 3 mod 4
}

bool in_E_a(i64 a, const PrimeFactorization& n) {
  if (std::gcd(reduce(a, n.n()), n.n()) != 1) return false;
  for (const auto& [p, e] : n.factors()) {
    if (p % 4 == 3 && jacobi(reduce(a, p), p) != 1) return false;
  }
  return true;
}

DensityReport density_report(i64 a, u64 x, const Rational& threshold, unsigned threads, u64 truncation_prime) {
  if (a == 0) throw InvalidArgument("density_report: a must be nonzero");
  if (x < 2) throw InvalidArgument("density_report: x must be >= 2");
  if (truncation_prime < 3) throw InvalidArgument("density_report: truncation prime must be >= 3");

  DensityReport rep;
  rep.a = a;
  rep.x = x;
  rep.threshold = threshold;
  rep.k_a = k_a_constant(a);
  rep.truncation_prime = truncation_prime;

  const SmallestFactorSieve sieve(std::max(x, truncation_prime));
  const unsigned workers = threads == 0 ? default_threads() : threads;
  const std::size_t chunks = workers <= 1 ? 1 : 8 * workers;
  std::vector<u64> e_counts(chunks, 0), c_counts(chunks, 0);
  parallel_chunks(2, x + 1, chunks, workers, [&](std::size_t c, u64 lo, u64 hi) {
    for (u64 n = lo; n < hi; ++n) {
      const auto f = sieve.factorize(n);
      if (!in_E_a(a, f)) continue;
      ++e_counts[c];
      if (ratio_from_factors(a, f) > threshold) ++c_counts[c];
    }
  });
  rep.e_a_count = std::accumulate(e_counts.begin(), e_counts.end(), u64{0});
  rep.c_a_count = std::accumulate(c_counts.begin(), c_counts.end(), u64{0});
  rep.empirical_density = rep.e_a_count ? Rational(rep.c_a_count, rep.e_a_count) : Rational{0};

  long double product = 1.0L;
  for (u64 p : sieve.primes()) {
    if (p > truncation_prime) break;
    if (p % 4 != 3 || jacobi(reduce(a, p), p) != 1) continue;
    product *= 1.0L - 1.0L / (static_cast<long double>(p) * static_cast<long double>(p));
  }
  rep.truncated_bound = rep.k_a.to_long_double() * product;
  // prod_{p > P}(1 - p^-2) >= 1 - sum_{m > P} m^-2 > 1 - 1/P
  rep.rigorous_bound = rep.truncated_bound * (1.0L - 1.0L / static_cast<long double>(truncation_prime));
  return rep;
}

std::vector<u64> primes_3_mod_4(std::size_t count) {
  std::vector<u64> out;
  for (u64 p = 3; out.size() < count; p += 4)
    if (is_prime(p)) out.push_back(p);
  return out;
}

PrimorialReport primorial_series(i64 a, unsigned k_max, unsigned t) {
  if (t < 2) throw InvalidArgument("primorial_series: exponent t must be >= 2");
  PrimorialReport rep;
  rep.a = a;
  rep.t = t;
  const auto primes = primes_3_mod_4(k_max);
  u64 primorial = 1;
  Rational c2{1}, c2_pow{1};
  for (unsigned k = 1; k <= k_max; ++k) {
    const u64 p = primes[k - 1];
    if (reduce(a, p) == 0)
      throw InvalidArgument("primorial_series: a = " + std::to_string(a) + " shares the factor " + std::to_string(p));
    if (jacobi(reduce(a, p), p) != 1)
      throw InvalidArgument("primorial_series: a = " + std::to_string(a) + " is not a square mod " + std::to_string(p));
    if (__builtin_mul_overflow(primorial, p, &primorial))
      throw ArithmeticOverflow("primorial_series: N_k exceeds 64 bits at k = " + std::to_string(k));
    c2 *= factor_ratio(a, p, 1);
    c2_pow *= factor_ratio(a, p, t);
    rep.rows.push_back({k, primorial, c2, c2_pow, std::log(std::log(static_cast<long double>(primorial)))});
  }
  return rep;
}

CoverageReport coverage_check(const HyperbolaSpec& spec, const EnumerationOptions& options) {
  if (spec.d < 3) throw InvalidArgument("coverage_check: dimension must be >= 3");
  CoverageReport rep;
  rep.spec = spec;
  const ResidueSet attained = signed_sumset(spec, options);
  rep.missing = attained.complement();
  rep.covered = rep.missing.empty();
  rep.theorem_applies = factorize(spec.n).least_prime() > 7;
  return rep;
}

SumProductTriple solve_sum_product(i64 b, i64 a, u64 p, unsigned t) {
  if (!is_prime(p)) throw InvalidArgument("solve_sum_product: p = " + std::to_string(p) + " is not prime");
  if (p <= 7) throw Unsupported("solve_sum_product: requires p > 7");
  if (t == 0) throw InvalidArgument("solve_sum_product: exponent must be >= 1");
  if (reduce(a, p) == 0) throw InvalidArgument("solve_sum_product: a must be coprime to p");

  const u64 q = checked_pow(p, t);
  const u64 aq = reduce(a, q), bq = reduce(b, q);
  const u64 ap = aq % p, bp = bq % p;

  for (u64 y = 1; y < p; ++y) {
    // R(y) = -4a y^3 + b^2 y^2 - 2b y + 1 (mod p)
    const u64 y2 = mul_mod(y, y, p), y3 = mul_mod(y2, y, p);
    u64 r = (p - mul_mod(mul_mod(4 % p, ap, p), y3, p)) % p;
    r = (r + mul_mod(mul_mod(bp, bp, p), y2, p)) % p;
    r = (r + p - mul_mod(mul_mod(2, bp, p), y, p)) % p;
    r = (r + 1) % p;
    if (r == 0 || jacobi(r, p) != 1) continue;

    // x^2 + x (y^-1 - b) + a y = 0 (mod q); discriminant (y^-1 - b)^2 - 4 a y.
    const u64 yinv = inverse_mod(y, q);
    const u64 lin = (yinv + q - bq) % q;
    const u64 disc = (mul_mod(lin, lin, q) + q - mul_mod(mul_mod(4 % q, aq, q), y, q)) % q;
    const auto roots = sqrt_mod_pp(static_cast<i64>(disc), p, t);
    if (roots.empty()) throw InvariantViolation("solve_sum_product: discriminant square did not lift");
    const u64 inv2 = inverse_mod(2, q);
    const u64 x = mul_mod((roots.front() + q - lin) % q, inv2, q);

    SumProductTriple out{x, yinv, ((bq + q - x) % q + q - yinv) % q, q};
    const bool sum_ok = ((out.x1 + out.x2) % q + out.x3) % q == bq;
    const bool prod_ok = mul_mod(mul_mod(out.x1, out.x2, q), out.x3, q) == aq;
    if (!sum_ok || !prod_ok) throw InvariantViolation("solve_sum_product: substitution check failed");
    return out;
  }
  throw InvariantViolation("solve_sum_product: no y with R(y) a nonzero square mod " + std::to_string(p));
}

std::vector<u64> sample_units(u64 n, bool all, unsigned samples, std::uint64_t seed) {
  std::vector<u64> out;
  if (all || euler_phi(n) <= samples) {
    for (u64 a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) out.push_back(a);
    return out;
  }
  std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
  std::uniform_int_distribution<u64> dist(1, n - 1);
  while (out.size() < samples) {
    const u64 a = dist(rng);
    if (std::gcd(a, n) != 1 || std::find(out.begin(), out.end(), a) != out.end()) continue;
    out.push_back(a);
  }
  return out;
}

VerifySummary verify_prime_powers(u64 max_pp, unsigned threads) {
  return run_sweep(prime_powers_up_to(max_pp), threads, [](u64 q) {
    VerifySummary s;
    s.moduli = 1;
    const auto f = factorize(q);
    const u64 p = f.factors()[0].p;
    const unsigned t = f.factors()[0].e;
    const HyperbolaOracle oracle(q);
    for (u64 a = 1; a < q; ++a) {
      if (a % p == 0) continue;
      const auto sets = oracle.sum_and_difference(static_cast<i64>(a));
      compare_case(s, q, a, SetKind::sum, card_S2_pp(static_cast<i64>(a), p, t, SetKind::sum), sets.sums.size());
      compare_case(s, q, a, SetKind::difference, card_S2_pp(static_cast<i64>(a), p, t, SetKind::difference),
                   sets.diffs.size());
    }
    return s;
  });
}

VerifySummary verify_composites(u64 max_n, u64 exhaustive_up_to, unsigned samples_per_n, std::uint64_t seed,
                                unsigned threads) {
  std::vector<u64> moduli;
  for (u64 n = 2; n <= max_n; ++n) moduli.push_back(n);
  return run_sweep(moduli, threads, [&](u64 n) {
    VerifySummary s;
    s.moduli = 1;
    const HyperbolaOracle oracle(n);
    for (u64 a : sample_units(n, n <= exhaustive_up_to, samples_per_n, seed)) {
      const auto sets = oracle.sum_and_difference(static_cast<i64>(a));
      const auto sum = card_signed_sumset(HyperbolaSpec::make(2, 2, static_cast<i64>(a), n));
      const auto diff = card_signed_sumset(HyperbolaSpec::make(2, 1, static_cast<i64>(a), n));
      compare_case(s, n, a, SetKind::sum, sum.total, sets.sums.size());
      compare_case(s, n, a, SetKind::difference, diff.total, sets.diffs.size());
    }
    return s;
  });
}

}  // namespace modhyp
