#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "modhyp/arith.hpp"
#include "modhyp/errors.hpp"

using namespace modhyp;

namespace {

std::vector<u64> brute_roots(i64 a, u64 q) {
  std::vector<u64> out;
  const u64 r = reduce(a, q);
  for (u64 x = 0; x < q; ++x)
    if (x * x % q == r) out.push_back(x);
  return out;
}

// q <= 2^32, so k * k does not overflow.
std::vector<bool> brute_squares(u64 q) {
  std::vector<bool> s(q, false);
  for (u64 k = 0; k < q; ++k) s[k * k % q] = true;
  return s;
}

std::vector<std::pair<u64, unsigned>> prime_powers_up_to(u64 limit) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    u64 q = p;
    for (unsigned t = 1; q <= limit; ++t, q *= p) out.emplace_back(p, t);
  }
  return out;
}

}  // namespace

TEST(Factorize, SmallExamples) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.factors()[0], (PrimePower{2, 3}));
  EXPECT_EQ(f.factors()[1], (PrimePower{3, 2}));
  EXPECT_EQ(f.factors()[2], (PrimePower{5, 1}));
  EXPECT_TRUE(factorize(1).empty());
  const auto g = factorize(1024);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.factors()[0], (PrimePower{2, 10}));
  EXPECT_THROW(factorize(0), InvalidArgument);
}

TEST(Factorize, ReassemblesEveryNUpToMillion) {
  SmallestFactorSieve sieve(1'000'000);
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const auto f = factorize(n);
    ASSERT_EQ(multiply_out(f.factors()), n) << n;
    ASSERT_EQ(f, sieve.factorize(n)) << n;
    for (std::size_t i = 1; i < f.size(); ++i) ASSERT_LT(f.factors()[i - 1].p, f.factors()[i].p);
  }
}

TEST(Factorize, LargeSemiprimesAndPrimes) {
  const u64 p = 1'000'000'007, q = 998'244'353;
  const auto f = factorize(p * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.factors()[0].p, q);
  EXPECT_EQ(f.factors()[1].p, p);
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  const auto g = factorize(18446744073709551557ULL);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(factorize(u64{1} << 63).factors()[0], (PrimePower{2, 63}));
}

TEST(Factorize, FromFactorsRejectsNonCanonical) {
  EXPECT_THROW(PrimeFactorization::from_factors({{4, 1}}), InvalidArgument);
  EXPECT_THROW(PrimeFactorization::from_factors({{3, 1}, {3, 2}}), InvalidArgument);
  EXPECT_EQ(PrimeFactorization::from_factors({{3, 1}, {2, 1}}).factors()[0].p, 2u);
  EXPECT_THROW(PrimeFactorization::from_factors({{3, 0}}), InvalidArgument);
  EXPECT_EQ(PrimeFactorization::from_factors({{2, 2}, {7, 1}}).n(), 28u);
}

TEST(Crt, Examples) {
  const std::vector<ResidueClass> a{{1, 4}, {2, 9}};
  EXPECT_EQ(crt_combine(a), (ResidueClass{29, 36}));
  const std::vector<ResidueClass> b{{0, 5}};
  EXPECT_EQ(crt_combine(b), (ResidueClass{0, 5}));
  const std::vector<ResidueClass> c{{1, 2}, {1, 3}, {1, 5}};
  EXPECT_EQ(crt_combine(c), (ResidueClass{1, 30}));
  const std::vector<ResidueClass> bad{{1, 4}, {1, 6}};
  EXPECT_THROW(crt_combine(bad), InvalidArgument);
}

TEST(Crt, LargeCoprimeModuli) {
  const u64 m1 = 4294967291ULL, m2 = 4294967279ULL;  // two primes just below 2^32
  const std::vector<ResidueClass> r{{12345, m1}, {67890, m2}};
  const auto c = crt_combine(r);
  EXPECT_EQ(c.modulus, m1 * m2);
  EXPECT_EQ(c.value % m1, 12345u);
  EXPECT_EQ(c.value % m2, 67890u);
}

TEST(Legendre, Examples) {
  for (u64 p : {3, 5, 7, 11, 101}) EXPECT_EQ(legendre(1, p), 1);
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(14, 7), 0);
  EXPECT_EQ(legendre(-1, 7), -1);
  EXPECT_THROW(legendre(1, 2), InvalidArgument);
  EXPECT_THROW(legendre(1, 9), InvalidArgument);
}

TEST(Legendre, CharacterSumIdentity) {
  for (u64 p = 3; p <= 100; p += 2) {
    if (!is_prime(p)) continue;
    for (i64 a = 1; a < static_cast<i64>(p); ++a) {
      i64 sum = 0;
      for (i64 i = 0; i < static_cast<i64>(p); ++i) sum += legendre(i * i - a, p);
      EXPECT_EQ(sum, -1) << "p=" << p << " a=" << a;
    }
  }
}

TEST(Legendre, CompletelyMultiplicative) {
  for (u64 p : {3, 5, 7, 13, 31, 97})
    for (i64 a = 1; a < 60; ++a)
      for (i64 b = 1; b < 60; ++b) {
        if ((a * b) % static_cast<i64>(p) == 0) continue;
        EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
      }
}

TEST(Legendre, MatchesEulerCriterionAndJacobi) {
  for (u64 p = 3; p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 a = 0; a < p; a += 1 + p / 50) {
      const u64 e = pow_mod(a, (p - 1) / 2, p);
      const int expected = a == 0 ? 0 : (e == 1 ? 1 : -1);
      EXPECT_EQ(legendre(static_cast<i64>(a), p), expected);
      EXPECT_EQ(jacobi(a, p), expected);
    }
  }
  // Jacobi is multiplicative in the modulus.
  for (u64 a = 0; a < 40; ++a) EXPECT_EQ(jacobi(a, 15), jacobi(a, 3) * jacobi(a, 5));
}

TEST(IsSquare, Examples) {
  for (unsigned t = 1; t <= 20; ++t) EXPECT_TRUE(is_square_mod_pp(17, 2, t)) << t;
  EXPECT_FALSE(is_square_mod_pp(3, 5, 1));
  for (i64 k = 0; k < 64; ++k) {
    const bool pm1 = k % 16 == 1 || k % 16 == 15;
    EXPECT_EQ(is_square_mod_pp(k * k + 3, 2, 5), pm1) << k;
  }
}

TEST(IsSquare, ShiftedThreeModEightAllFourCases) {
  // m = 4b + r: k^2 + 3 + 8m is a square mod 2^t (t >= 5) exactly when k = +-(4r + 1) mod 16.
  for (unsigned t = 5; t <= 12; ++t) {
    const u64 q = u64{1} << t;
    const auto sq = brute_squares(q);
    for (u64 m = 0; m < q / 8; ++m) {
      const u64 target = 4 * (m % 4) + 1;
      for (u64 k = 0; k < q; ++k) {
        const bool expected = k % 16 == target || k % 16 == 16 - target;
        ASSERT_EQ(sq[(k * k + 3 + 8 * m) % q], expected) << "t=" << t << " m=" << m << " k=" << k;
        ASSERT_EQ(is_square_mod_pp(static_cast<i64>(k * k + 3 + 8 * m), 2, t), expected);
      }
    }
  }
}

TEST(IsSquare, FourPowerTimesOneModEight) {
  for (unsigned t = 1; t <= 20; ++t)
    for (i64 k = 0; k <= 10; ++k)
      for (i64 m = 0; m < 50; ++m) {
        const i64 v = (i64{1} << (2 * k)) * (8 * m + 1);
        EXPECT_TRUE(is_square_mod_pp(v, 2, t)) << v << " t=" << t;
      }
}

TEST(IsSquare, MatchesExhaustiveIncludingMultiplesOfP) {
  for (auto [p, t] : prime_powers_up_to(2048)) {
    const u64 q = checked_pow(p, t);
    const auto sq = brute_squares(q);
    for (u64 a = 0; a < q; ++a)
      ASSERT_EQ(is_square_mod_pp(static_cast<i64>(a), p, t), sq[a]) << a << " mod " << p << "^" << t;
  }
}

TEST(Sqrt, Examples) {
  EXPECT_EQ(sqrt_mod_pp(2, 7, 1), (std::vector<u64>{3, 4}));
  EXPECT_EQ(sqrt_mod_pp(17, 2, 5), (std::vector<u64>{7, 9, 23, 25}));
  EXPECT_TRUE(sqrt_mod_pp(3, 5, 2).empty());
  EXPECT_THROW(sqrt_mod_pp(10, 5, 2), InvalidArgument);
}

TEST(Sqrt, MatchesExhaustiveSearch) {
  for (auto [p, t] : prime_powers_up_to(10'000)) {
    const u64 q = checked_pow(p, t);
    // Every residue for small q, a spread of residues otherwise.
    const u64 step = q <= 2048 ? 1 : q / 300 + 1;
    for (u64 a = 1; a < q; a += step) {
      if (a % p == 0) continue;
      ASSERT_EQ(sqrt_mod_pp(static_cast<i64>(a), p, t), brute_roots(static_cast<i64>(a), q))
          << a << " mod " << p << "^" << t;
    }
  }
}

TEST(Sqrt, LargePrimeTonelliShanks) {
  const u64 p = 998'244'353;  // p - 1 = 119 * 2^23
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const u64 x = rng() % (p - 1) + 1;
    const u64 a = mul_mod(x, x, p);
    const auto roots = sqrt_mod_pp(static_cast<i64>(a), p, 1);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_TRUE(roots[0] == std::min(x, p - x) && roots[1] == std::max(x, p - x));
  }
  const auto lifted = sqrt_mod_pp(2, 1'000'003, 2);
  for (u64 r : lifted) EXPECT_EQ(mul_mod(r, r, 1'000'003ULL * 1'000'003ULL), 2u);
}

TEST(CountSquares, Examples) {
  EXPECT_EQ(count_squares_mod_pp(3, 1), 2u);
  EXPECT_EQ(count_squares_mod_pp(3, 2), 4u);
  EXPECT_EQ(count_squares_mod_pp(2, 4), 4u);
}

TEST(CountSquares, MatchesExhaustive) {
  for (auto [p, t] : prime_powers_up_to(100'000)) {
    const auto sq = brute_squares(checked_pow(p, t));
    ASSERT_EQ(count_squares_mod_pp(p, t), static_cast<std::size_t>(std::count(sq.begin(), sq.end(), true))) << p << "^" << t;
  }
}

TEST(Helpers, InverseAndPhi) {
  for (u64 n = 2; n < 300; ++n) {
    u64 phi = 0;
    for (u64 x = 1; x < n; ++x) {
      if (std::gcd(x, n) != 1) continue;
      ++phi;
      EXPECT_EQ(mul_mod(x, inverse_mod(x, n), n), 1u);
    }
    EXPECT_EQ(euler_phi(n), phi) << n;
  }
  EXPECT_THROW(inverse_mod(6, 9), InvalidArgument);
  EXPECT_THROW(checked_pow(10, 20), ArithmeticOverflow);
  EXPECT_EQ(reduce(-3, 7), 4u);
}

TEST(Helpers, BarrettAgreesWithDivision) {
  std::mt19937_64 rng(11);
  for (u64 n : {2ULL, 3ULL, 1000ULL, 65537ULL, 4294967291ULL, 4294967295ULL}) {
    Barrett b(n);
    for (int i = 0; i < 2000; ++i) {
      const u64 x = rng() % n, y = rng() % n;
      ASSERT_EQ(b.mul(x, y), (x * y) % n);
      const u64 z = rng();
      ASSERT_EQ(b.reduce(z), z % n);
    }
  }
}
