#pragma once

// Dominance scans over ranges of moduli, density of sum-dominant moduli,
// primorial growth of c_2, full-coverage checks for d > 2, the constructive
// sum-product solver, and oracle-vs-closed-form verification sweeps.

#include <functional>
#include <string_view>
#include <vector>

#include "modhyp/arith.hpp"
#include "modhyp/cardinality.hpp"
#include "modhyp/hyperbola.hpp"
#include "modhyp/rational.hpp"
#include "modhyp/residue_set.hpp"

namespace modhyp {

enum class Dominance { sum_dominant, difference_dominant, balanced };

std::string_view to_string(Dominance d);
Dominance classify(const Rational& c2);

struct FactorRatio {
  u64 p = 0;
  unsigned t = 0;
  Rational ratio{1};
};

struct DominanceReport {
  i64 a = 0;
  u64 n = 0;
  Rational c2{1};
  Dominance classification = Dominance::balanced;
  std::vector<FactorRatio> factor_breakdown;
};

/// c_2(a;n) with its per-prime-power breakdown; a must be coprime to n.
DominanceReport dominance_report(i64 a, const PrimeFactorization& n);
DominanceReport dominance_report(i64 a, u64 n);

struct ScanSummary {
  u64 reported = 0;
  u64 skipped = 0;          // n in range sharing a factor with a
  u64 above_threshold = 0;  // reports with c_2 > L
};

using DominanceSink = std::function<void(const DominanceReport&)>;

/// One report per n in [2, n_max] coprime to a, delivered to `sink` in ascending n
/// regardless of the worker count.
ScanSummary dominance_scan(i64 a, u64 n_max, const Rational& threshold, const DominanceSink& sink,
                           unsigned threads = 0);

/// Convenience form collecting the stream.
std::vector<DominanceReport> dominance_scan(i64 a, u64 n_max, const Rational& threshold = Rational{1},
                                            unsigned threads = 0, ScanSummary* summary = nullptr);

/// The four-case constant: 1 for even a, 63/64 for a = 1 (8), 31/32 for a = 5 (8), 15/16 for a = 3 (4).
Rational k_a_constant(i64 a);

/// n coprime to a, and (a/p) = 1 for every prime p = 3 (mod 4) dividing n.
bool in_E_a(i64 a, const PrimeFactorization& n);

struct DensityReport {
  i64 a = 0;
  u64 x = 0;
  Rational threshold{1};
  u64 e_a_count = 0;
  u64 c_a_count = 0;
  Rational empirical_density{0};
  Rational k_a{1};
  u64 truncation_prime = 0;
  long double truncated_bound = 0;  // K_a * prod over p <= truncation_prime
  long double rigorous_bound = 0;   // truncated_bound * (1 - 1/truncation_prime), a certified lower bound
};

/// Counts n in [2, x] belonging to E_a and to C_a(L) = { n in E_a : c_2(a;n) > L }.
DensityReport density_report(i64 a, u64 x, const Rational& threshold = Rational{1}, unsigned threads = 0,
                             u64 truncation_prime = 100'000);

struct PrimorialRow {
  unsigned k = 0;
  u64 primorial = 0;  // N_k, product of the first k primes = 3 (mod 4)
  Rational c2{1};     // c_2(a;N_k)
  Rational c2_pow{1}; // c_2(a;N_k^t)
  long double log_log = 0;
};

struct PrimorialReport {
  i64 a = 0;
  unsigned t = 2;
  std::vector<PrimorialRow> rows;
};

/// First `count` primes congruent to 3 mod 4.
std::vector<u64> primes_3_mod_4(std::size_t count);

PrimorialReport primorial_series(i64 a, unsigned k_max, unsigned t = 2);

struct CoverageReport {
  HyperbolaSpec spec;
  bool covered = false;
  ResidueSet missing;
  bool theorem_applies = false;  // every prime factor of n exceeds 7
};

/// Exhaustively computes S_d(m;a;n) for d >= 3 and reports unattained residues.
CoverageReport coverage_check(const HyperbolaSpec& spec, const EnumerationOptions& options = {});

struct SumProductTriple {
  u64 x1 = 0, x2 = 0, x3 = 0;
  u64 modulus = 0;
};

/// Units x1, x2, x3 mod p^t with x1 + x2 + x3 = b and x1 x2 x3 = a, for primes p > 7.
SumProductTriple solve_sum_product(i64 b, i64 a, u64 p, unsigned t);

struct VerifyMismatch {
  u64 n = 0;
  u64 a = 0;
  SetKind kind = SetKind::sum;
  u64 closed_form = 0;
  u64 oracle = 0;
};

struct VerifySummary {
  u64 moduli = 0;
  u64 cases = 0;  // (n, a, kind) triples compared
  std::vector<VerifyMismatch> mismatches;
};

/// Every prime power q <= max_pp and every a coprime to q: closed-form |S|, |D| vs oracle.
VerifySummary verify_prime_powers(u64 max_pp, unsigned threads = 0);

/// Every n in [2, max_n]: CRT-composed totals vs oracle. All a for n <= exhaustive_up_to,
/// otherwise `samples_per_n` values of a drawn from a generator seeded with `seed`.
VerifySummary verify_composites(u64 max_n, u64 exhaustive_up_to = 300, unsigned samples_per_n = 20,
                                std::uint64_t seed = 0x5eed, unsigned threads = 0);

/// Residues a in [1, n) coprime to n: all of them when `all` is set, otherwise up to
/// `samples` distinct draws (deterministic in seed and n).
std::vector<u64> sample_units(u64 n, bool all, unsigned samples, std::uint64_t seed);

}  // namespace modhyp
