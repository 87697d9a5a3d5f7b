#pragma once

// Exact modular arithmetic on 64-bit moduli with 128-bit intermediates:
// factorization, CRT, Legendre symbols, square roots and square counts
// modulo prime powers.

#include <cstdint>
#include <span>
#include <vector>

namespace modhyp {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct PrimePower {
  u64 p = 0;
  unsigned e = 0;

  /// p^e; throws ArithmeticOverflow if it does not fit in 64 bits.
  u64 value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
class PrimeFactorization {
 public:
  PrimeFactorization() = default;

  /// Validates and builds from explicit factors (any order; sorted on entry).
  static PrimeFactorization from_factors(std::vector<PrimePower> factors);

  u64 n() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }

  /// Smallest prime factor, or 0 for n = 1.
  u64 least_prime() const noexcept { return factors_.empty() ? 0 : factors_.front().p; }

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  friend PrimeFactorization factorize(u64 n);
  friend class SmallestFactorSieve;

  u64 n_ = 1;
  std::vector<PrimePower> factors_;
};

struct ResidueClass {
  u64 value = 0;
  u64 modulus = 1;

  /// Reduces an arbitrary signed value into [0, modulus).
  static ResidueClass make(i64 value, u64 modulus);

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

// --- primitive helpers ---------------------------------------------------

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// a mod m for signed a, result in [0, m).
u64 reduce(i64 a, u64 m);

/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);

/// p^e with overflow detection.
u64 checked_pow(u64 p, unsigned e);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Euler's totient from a factorization.
u64 euler_phi(const PrimeFactorization& f);
u64 euler_phi(u64 n);

/// Barrett reduction for a fixed modulus n >= 1; reduce(x) == x % n for any 64-bit x.
class Barrett {
 public:
  Barrett() = default;
  explicit Barrett(u64 n) : n_(n), m_(n <= 1 ? 0 : static_cast<u64>((u128{1} << 64) / n)) {}

  u64 modulus() const noexcept { return n_; }

  u64 reduce(u64 x) const noexcept {
    if (n_ <= 1) return 0;
    const u64 q = static_cast<u64>((static_cast<u128>(x) * m_) >> 64);
    u64 r = x - q * n_;
    return r >= n_ ? r - n_ : r;
  }

  u64 mul(u64 a, u64 b) const noexcept { return reduce(a * b); }  // a, b < 2^32

 private:
  u64 n_ = 1;
  u64 m_ = 0;
};

/// Smallest-prime-factor table for fast factorization of every n <= limit.
class SmallestFactorSieve {
 public:
  explicit SmallestFactorSieve(u64 limit);

  u64 limit() const noexcept { return limit_; }
  PrimeFactorization factorize(u64 n) const;
  u64 smallest_factor(u64 n) const { return spf_[n]; }

  /// All primes up to the limit, ascending.
  std::vector<u64> primes() const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

// --- spec operations ----------------------------------------------------

/// Canonical factorization of n >= 1 (n = 1 gives no factors).
/// Trial division up to 10^6, then Pollard-Brent rho.
PrimeFactorization factorize(u64 n);

/// Product of p^e over factors.
u64 multiply_out(std::span<const PrimePower> factors);

/// Unique residue modulo the product of pairwise-coprime moduli.
ResidueClass crt_combine(std::span<const ResidueClass> residues);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(i64 a, u64 p);

/// Jacobi symbol without primality checks; callers guarantee odd p.
int jacobi(u64 a, u64 n);

/// True iff x^2 = a (mod p^t) is solvable; a need not be coprime to p.
bool is_square_mod_pp(i64 a, u64 p, unsigned t);

/// All roots of x^2 = a (mod p^t) in ascending order; requires gcd(a, p) = 1.
std::vector<u64> sqrt_mod_pp(i64 a, u64 p, unsigned t);

/// Number of distinct values of k^2 mod p^t (closed form, integrality asserted).
u64 count_squares_mod_pp(u64 p, unsigned t);

}  // namespace modhyp
