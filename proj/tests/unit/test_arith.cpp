#include <gtest/gtest.h>

#include <random>

#include "qgap/arith.hpp"
#include "qgap/error.hpp"

using namespace qgap;

namespace {

Integer brute_sigma(std::int64_t n, unsigned k, std::int64_t N = 0) {
  Integer s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (N != 0 && (n / d) % N == 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
    s += t;
  }
  return s;
}

// Signed Bernoulli numbers from sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<Rational> signed_bernoulli(int upto) {
  std::vector<Rational> B(static_cast<std::size_t>(upto) + 1);
  B[0] = 1;
  for (int m = 1; m <= upto; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * B[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return B;
}

}  // namespace

TEST(OrdP, Examples) {
  EXPECT_EQ(ord_p(Integer(48), 2), POrder::finite(4));
  EXPECT_TRUE(ord_p(Rational(0), 3).is_infinite());
  EXPECT_EQ(ord_p(make_rational(5, 8), 2), POrder::finite(-3));
  EXPECT_EQ(ord_p(make_rational(-18, 5), 3), POrder::finite(2));
}

TEST(OrdP, InfiniteOrdersAboveFinite) {
  EXPECT_LT(POrder::finite(1000), POrder::infinite());
  EXPECT_THROW(POrder::infinite().value(), DomainError);
  EXPECT_EQ(POrder::infinite().to_string(), "INFINITE");
}

TEST(OrdP, MultiplicativeOnRandomRationals) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-5000, 5000), den(1, 5000);
  int cases = 0;
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 100; ++i) {
      const Rational x = make_rational(num(rng), den(rng)), y = make_rational(num(rng), den(rng));
      if (x == 0 || y == 0) continue;
      ++cases;
      EXPECT_EQ(ord_p(Rational(x * y), p).value(), ord_p(x, p).value() + ord_p(y, p).value()) << x << " " << y;
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(Digits, Examples) {
  EXPECT_EQ(digit_sum(1, 2), 1);
  EXPECT_EQ(digit_sum(5, 3), 3);
  EXPECT_EQ(largest_digit(5, 3), 2);
}

TEST(Digits, BinaryDigitSumBounds) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    std::int64_t log2 = 0;
    while ((std::int64_t{2} << log2) <= n) ++log2;
    EXPECT_LE(digit_sum(n, 2), 1 + log2) << n;
  }
  for (int x = 0; x < 62; ++x) EXPECT_EQ(digit_sum(std::int64_t{1} << x, 2), 1);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(1, 3), 1);
  EXPECT_EQ(sigma(6, 1), 12);
  EXPECT_EQ(sigma(4, 0), 3);
  EXPECT_EQ(sigma_odd(3), 4);
  EXPECT_EQ(sigma_alt(2, 3), 7);
  EXPECT_EQ(sigma_star(4, 2, 3), 64);
  EXPECT_EQ(sigma_star(1, 2, 3), 1);
}

TEST(Sigma, AgreesWithDivisorLoop) {
  for (std::int64_t n = 1; n <= 600; ++n) {
    for (unsigned k : {0u, 1u, 3u, 5u}) ASSERT_EQ(sigma(n, k), brute_sigma(n, k)) << n << " " << k;
    Integer odd = 0, alt = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      if (d % 2) odd += d;
      alt += (d % 2 ? -1 : 1) * Integer(d) * d * d;
    }
    ASSERT_EQ(sigma_odd(n), odd) << n;
    ASSERT_EQ(sigma_alt(n, 3), alt) << n;
  }
}

// Excluding the d with N | n/d removes exactly the divisors of n/N, so
// sigma_star(n, N, k) = sigma(n, k) - sigma(n/N, k) when N | n.
TEST(Sigma, StarMatchesBothFormulasUpTo10000) {
  for (std::int64_t N : {2, 3}) {
    for (unsigned k : {1u, 3u, 5u}) {
      for (std::int64_t n = 1; n <= 10000; ++n) {
        const Integer expected = n % N == 0 ? sigma(n, k) - sigma(n / N, k) : sigma(n, k);
        ASSERT_EQ(sigma_star(n, N, k), expected) << n << " " << N << " " << k;
        if (n <= 800) ASSERT_EQ(sigma_star(n, N, k), brute_sigma(n, k, N)) << n;
      }
    }
  }
}

TEST(Bernoulli, PositiveConvention) {
  EXPECT_EQ(bernoulli(1), make_rational(1, 6));
  EXPECT_EQ(bernoulli(2), make_rational(1, 30));
  EXPECT_EQ(bernoulli(3), make_rational(1, 42));
  const auto B = signed_bernoulli(40);
  for (int k = 1; k <= 20; ++k) EXPECT_EQ(bernoulli(k), abs(B[static_cast<std::size_t>(2 * k)])) << k;
}

TEST(Bernoulli, AlphaTable) {
  EXPECT_EQ(alpha_coeff(0), 0);
  EXPECT_EQ(alpha_coeff(2), -24);
  EXPECT_EQ(alpha_coeff(4), 240);
  EXPECT_EQ(alpha_coeff(6), -504);
  EXPECT_EQ(alpha_coeff(8), 480);
  EXPECT_EQ(alpha_coeff(10), -264);
  EXPECT_EQ(alpha_coeff(12), make_rational(65520, 691));
}

TEST(Moebius, Examples) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(30), -1);
}

TEST(Rational, Formatting) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(12)), "12");
  EXPECT_EQ(floor_mod(-7, 3), 2);
}
