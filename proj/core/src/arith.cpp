#include "modhyp/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "modhyp/errors.hpp"

namespace modhyp {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

u64 add_mod(u64 a, u64 b, u64 m) {
  const u64 s = a + b;
  return (s < a || s >= m) ? s - m : s;
}

bool miller_rabin_witness(u64 n, u64 base, u64 d, unsigned s) {
  base %= n;
  if (base == 0) return false;
  u64 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant with batched gcds. Deterministic for a given (n, c).
u64 pollard_brent(u64 n, u64 c) {
  if (n % 2 == 0) return 2;
  auto f = [&](u64 x) { return add_mod(mul_mod(x, x, n), c, n); };
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  const u64 m = 128;
  u64 r = 1;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_composite(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    const u64 d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_composite(d, out);
      split_composite(n / d, out);
      return;
    }
  }
}

std::vector<PrimePower> group(std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().p == p)
      ++out.back().e;
    else
      out.push_back({p, 1});
  }
  return out;
}

unsigned valuation(u64& v, u64 p) {
  unsigned s = 0;
  while (v % p == 0) {
    v /= p;
    ++s;
  }
  return s;
}

u64 tonelli_shanks(u64 a, u64 p) {
  if (p == 2) return a & 1;
  if (a == 0) return 0;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (jacobi(z, p) != -1) ++z;

  u64 m = s;
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(a, q, p);
  u64 r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

}  // namespace

u64 PrimePower::value() const { return checked_pow(p, e); }

PrimeFactorization PrimeFactorization::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& l, const PrimePower& r) { return l.p < r.p; });
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.e == 0) throw InvalidArgument("factorization: exponent must be >= 1");
    if (!is_prime(f.p)) throw InvalidArgument("factorization: " + std::to_string(f.p) + " is not prime");
    if (i > 0 && factors[i - 1].p == f.p)
      throw InvalidArgument("factorization: repeated prime " + std::to_string(f.p));
  }
  PrimeFactorization out;
  out.n_ = multiply_out(factors);
  out.factors_ = std::move(factors);
  return out;
}

ResidueClass ResidueClass::make(i64 value, u64 modulus) {
  if (modulus == 0) throw InvalidArgument("residue class: modulus must be positive");
  return {reduce(value, modulus), modulus};
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a + 1) avoids overflow at INT64_MIN.
  const u64 r = static_cast<u64>(-(a + 1)) % m;
  return m - 1 - r;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1)
    throw InvalidArgument("inverse_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  old_s %= static_cast<i128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

u64 checked_pow(u64 p, unsigned e) {
  u64 out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, p, &out))
      throw ArithmeticOverflow(std::to_string(p) + "^" + std::to_string(e) + " exceeds 64 bits");
  }
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases due to Jim Sinclair; sufficient for all n < 2^64.
  for (u64 base : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (miller_rabin_witness(n, base, d, s)) return false;
  }
  return true;
}

u64 euler_phi(const PrimeFactorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors()) phi *= checked_pow(p, e - 1) * (p - 1);
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

SmallestFactorSieve::SmallestFactorSieve(u64 limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit > 0xFFFFFFFFULL) throw InvalidArgument("sieve limit must fit in 32 bits");
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (u64 j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

PrimeFactorization SmallestFactorSieve::factorize(u64 n) const {
  if (n == 0 || n > limit_) throw InvalidArgument("sieve factorize: n out of range");
  const u64 n_in = n;
  std::vector<PrimePower> factors;
  while (n > 1) {
    const u64 p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  // Already canonical; skip the primality re-validation of from_factors.
  PrimeFactorization out;
  out.n_ = n_in;
  out.factors_ = std::move(factors);
  return out;
}

std::vector<u64> SmallestFactorSieve::primes() const {
  std::vector<u64> out;
  for (u64 i = 2; i <= limit_; ++i)
    if (spf_[i] == i) out.push_back(i);
  return out;
}

PrimeFactorization factorize(u64 n) {
  if (n == 0) throw InvalidArgument("factorize: n must be >= 1");
  PrimeFactorization out;
  out.n_ = n;
  u64 rest = n;
  auto take = [&](u64 p) {
    unsigned e = valuation(rest, p);
    if (e) out.factors_.push_back({p, e});
  };
  take(2);
  take(3);
  for (u64 p = 5; p <= kTrialLimit && p * p <= rest; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) {
    std::vector<u64> big;
    split_composite(rest, big);
    for (auto& f : group(std::move(big))) out.factors_.push_back(f);
  }
  return out;
}

u64 multiply_out(std::span<const PrimePower> factors) {
  u64 n = 1;
  for (const auto& f : factors) {
    if (__builtin_mul_overflow(n, f.value(), &n)) throw ArithmeticOverflow("factorization product exceeds 64 bits");
  }
  return n;
}

ResidueClass crt_combine(std::span<const ResidueClass> residues) {
  ResidueClass acc{0, 1};
  for (const auto& rc : residues) {
    if (rc.modulus == 0) throw InvalidArgument("crt_combine: zero modulus");
    if (std::gcd(acc.modulus, rc.modulus) != 1)
      throw InvalidArgument("crt_combine: moduli " + std::to_string(acc.modulus) + " and " +
                            std::to_string(rc.modulus) + " are not coprime");
    u64 product;
    if (__builtin_mul_overflow(acc.modulus, rc.modulus, &product))
      throw ArithmeticOverflow("crt_combine: product of moduli exceeds 64 bits");
    const u64 r2 = rc.value % rc.modulus;
    const u64 inv = inverse_mod(acc.modulus % rc.modulus, rc.modulus);
    const u64 diff = (r2 + rc.modulus - acc.value % rc.modulus) % rc.modulus;
    const u64 k = mul_mod(diff, inv, rc.modulus);
    const u128 x = static_cast<u128>(acc.modulus) * k + acc.value;
    acc = {static_cast<u64>(x % product), product};
  }
  return acc;
}

int jacobi(u64 a, u64 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    const int tz = std::countr_zero(a);
    a >>= tz;
    if ((tz & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(i64 a, u64 p) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("legendre: " + std::to_string(p) + " is not an odd prime");
  return jacobi(reduce(a, p), p);
}

bool is_square_mod_pp(i64 a, u64 p, unsigned t) {
  if (t == 0) return true;
  const u64 q = checked_pow(p, t);
  u64 v = reduce(a, q);
  if (v == 0) return true;
  const unsigned s = valuation(v, p);
  if (s % 2 == 1) return false;
  const unsigned rem = t - s;
  if (p == 2) {
    if (rem == 1) return true;
    if (rem == 2) return v % 4 == 1;
    return v % 8 == 1;
  }
  return jacobi(v % p, p) == 1;
}

std::vector<u64> sqrt_mod_pp(i64 a, u64 p, unsigned t) {
  if (t == 0) throw InvalidArgument("sqrt_mod_pp: exponent must be >= 1");
  const u64 q = checked_pow(p, t);
  const u64 v = reduce(a, q);
  if (v % p == 0) throw InvalidArgument("sqrt_mod_pp: a must be coprime to p");

  std::vector<u64> roots;
  if (p == 2) {
    if (t == 1) return {1};
    if (t == 2) {
      if (v % 4 == 1) roots = {1, 3};
      return roots;
    }
    if (v % 8 != 1) return roots;
    // r^2 = v (mod 2^k) lifts to r or r + 2^(k-1) modulo 2^(k+1).
    u64 r = 1;
    for (unsigned k = 3; k < t; ++k) {
      const u64 mod_next = u64{1} << (k + 1);
      const u128 sq = static_cast<u128>(r) * r;
      if (static_cast<u64>(sq % mod_next) != v % mod_next) r += u64{1} << (k - 1);
    }
    const u64 half = q >> 1;
    roots = {r % q, (q - r) % q, (r + half) % q, (q - r + half) % q};
  } else {
    if (jacobi(v % p, p) != 1) return roots;
    u64 r = tonelli_shanks(v % p, p);
    u64 pk = p;
    for (unsigned k = 1; k < t; ++k) {
      const u64 next = pk * p;
      // r <- r - (r^2 - v) / (2r) (mod p^(k+1))
      const u64 f = (mul_mod(r, r, next) + next - v % next) % next;
      const u64 inv2r = inverse_mod(mul_mod(2, r, next), next);
      r = (r + next - mul_mod(f, inv2r, next)) % next;
      pk = next;
    }
    roots = {r, q - r};
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

u64 count_squares_mod_pp(u64 p, unsigned t) {
  if (t == 0) throw InvalidArgument("count_squares_mod_pp: exponent must be >= 1");
  if (!is_prime(p)) throw InvalidArgument("count_squares_mod_pp: p must be prime");
  const i128 sign = (t % 2 == 1) ? 1 : -1;  // (-1)^(t-1)
  i128 num, den;
  if (p == 2) {
    // 2^(t-1)/3 + (-1)^(t-1)/6 + 3/2
    num = static_cast<i128>(checked_pow(2, t)) + sign + 9;
    den = 6;
  } else {
    // p^(t+1)/(2(p+1)) + (-1)^(t-1)(p-1)/(4(p+1)) + 3/4
    const i128 pp = static_cast<i128>(checked_pow(p, t)) * p;
    const i128 pi = static_cast<i128>(p);
    num = 2 * pp + sign * (pi - 1) + 3 * (pi + 1);
    den = 4 * (pi + 1);
  }
  if (num % den != 0) throw InvariantViolation("square count closed form is not integral");
  return static_cast<u64>(num / den);
}

}  // namespace modhyp
