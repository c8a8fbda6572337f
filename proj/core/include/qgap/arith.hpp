#pragma once

// Exact scalar kernel: rationals, p-adic orders, digit sums, divisor sums,
// Bernoulli numbers (all-positive convention) and the Eisenstein normalizers.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qgap {

using Integer = mpz_class;
/// Always kept canonical (lowest terms, positive denominator); build through
/// make_rational when starting from a numerator/denominator pair.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& x);
/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& x);

/// Floor-division remainder: the least nonnegative r with r = a (mod b), b > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t n);

/// Exponent of a prime in a rational number; INFINITE only for zero.
class POrder {
 public:
  static POrder finite(std::int64_t value) { return POrder(value); }
  static POrder infinite() { return POrder(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws DomainError for INFINITE.
  std::int64_t value() const;

  friend bool operator==(const POrder&, const POrder&) = default;
  /// INFINITE compares greater than every finite order.
  friend std::strong_ordering operator<=>(const POrder& a, const POrder& b);

  std::string to_string() const;

 private:
  POrder() = default;
  explicit POrder(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

POrder ord_p(const Integer& x, std::int64_t p);
POrder ord_p(const Rational& x, std::int64_t p);
std::int64_t ord_p(std::int64_t n, std::int64_t p);

std::int64_t digit_sum(std::int64_t n, std::int64_t base);
std::int64_t largest_digit(std::int64_t n, std::int64_t base);

Integer sigma(std::int64_t n, unsigned alpha);
/// Sum of the odd divisors of n.
Integer sigma_odd(std::int64_t n);
/// Sum over divisors d of (-1)^d d^k.
Integer sigma_alt(std::int64_t n, unsigned k);
/// Sum of d^k over divisors d of n with N not dividing n/d.
Integer sigma_star(std::int64_t n, std::int64_t N, unsigned k);

/// B_k with B_1 = 1/6, B_2 = 1/30, ...: every value positive.
Rational bernoulli(std::int64_t k);
/// Normalizer of G_h = 1 + alpha_h sum sigma_{h-1}(n) q^n; alpha_0 = 0.
Rational alpha_coeff(std::int64_t h);

int moebius(std::int64_t n);

}  // namespace qgap
