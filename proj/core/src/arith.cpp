#include "qgap/arith.hpp"

#include <algorithm>
#include <vector>

#include "qgap/error.hpp"

namespace qgap {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) throw DomainError(std::string(what) + ": argument must be positive, got " + std::to_string(n));
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("ord_p: " + std::to_string(p) + " is not prime");
}

Integer ipow(std::int64_t base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
  if (base < 0 && (e & 1U)) r = -r;
  return r;
}

template <typename Fn>
void for_each_divisor(std::int64_t n, Fn&& fn) {
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    fn(d);
    if (d != n / d) fn(n / d);
  }
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw DomainError("floor_mod: modulus must be positive");
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t POrder::value() const {
  if (!value_) throw DomainError("POrder::value on INFINITE order");
  return *value_;
}

std::strong_ordering operator<=>(const POrder& a, const POrder& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

std::string POrder::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("INFINITE");
}

POrder ord_p(const Integer& x, std::int64_t p) {
  require_prime(p);
  if (x == 0) return POrder::infinite();
  Integer prime = static_cast<unsigned long>(p);
  Integer rest;
  auto k = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return POrder::finite(static_cast<std::int64_t>(k));
}

POrder ord_p(const Rational& x, std::int64_t p) {
  require_prime(p);
  if (x == 0) return POrder::infinite();
  return POrder::finite(ord_p(x.get_num(), p).value() - ord_p(x.get_den(), p).value());
}

std::int64_t ord_p(std::int64_t n, std::int64_t p) {
  require_prime(p);
  if (n == 0) throw DomainError("ord_p(0) is infinite; use the Integer overload");
  if (n < 0) n = -n;
  std::int64_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::int64_t digit_sum(std::int64_t n, std::int64_t base) {
  require_positive(n, "digit_sum");
  if (base < 2) throw DomainError("digit_sum: base must be >= 2");
  std::int64_t s = 0;
  for (; n > 0; n /= base) s += n % base;
  return s;
}

std::int64_t largest_digit(std::int64_t n, std::int64_t base) {
  require_positive(n, "largest_digit");
  if (base < 2) throw DomainError("largest_digit: base must be >= 2");
  std::int64_t m = 0;
  for (; n > 0; n /= base) m = std::max(m, n % base);
  return m;
}

Integer sigma(std::int64_t n, unsigned alpha) {
  require_positive(n, "sigma");
  Integer s = 0;
  for_each_divisor(n, [&](std::int64_t d) { s += ipow(d, alpha); });
  return s;
}

Integer sigma_odd(std::int64_t n) {
  require_positive(n, "sigma_odd");
  Integer s = 0;
  for_each_divisor(n, [&](std::int64_t d) {
    if (d % 2 == 1) s += d;
  });
  return s;
}

Integer sigma_alt(std::int64_t n, unsigned k) {
  require_positive(n, "sigma_alt");
  Integer s = 0;
  for_each_divisor(n, [&](std::int64_t d) {
    if (d % 2 == 0) s += ipow(d, k);
    else s -= ipow(d, k);
  });
  return s;
}

Integer sigma_star(std::int64_t n, std::int64_t N, unsigned k) {
  require_positive(n, "sigma_star");
  if (N < 2) throw DomainError("sigma_star: N must be >= 2");
  Integer s = 0;
  for_each_divisor(n, [&](std::int64_t d) {
    if ((n / d) % N != 0) s += ipow(d, k);
  });
  return s;
}

Rational bernoulli(std::int64_t k) {
  require_positive(k, "bernoulli");
  // x / (e^x - 1) = 1 / sum_{m>=0} x^m / (m+1)!, expanded to degree 2k.
  const std::size_t len = static_cast<std::size_t>(2 * k + 1);
  std::vector<Rational> denom(len);
  Integer fact = 1;
  for (std::size_t m = 0; m < len; ++m) {
    fact *= static_cast<unsigned long>(m + 1);
    denom[m] = make_rational(1, fact);
  }
  std::vector<Rational> inv(len);
  inv[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += denom[j] * inv[n - j];
    inv[n] = -acc;
  }
  Integer fact2k;
  mpz_fac_ui(fact2k.get_mpz_t(), static_cast<unsigned long>(2 * k));
  Rational b = inv[len - 1] * Rational(fact2k);
  if (k % 2 == 0) b = -b;
  return b;
}

Rational alpha_coeff(std::int64_t h) {
  if (h < 0 || h % 2 != 0) throw DomainError("alpha_coeff: h must be even and nonnegative, got " + std::to_string(h));
  if (h == 0) return 0;
  const std::int64_t k = h / 2;
  Rational gamma = Rational(4 * k) / bernoulli(k);
  if (k % 2 != 0) gamma = -gamma;
  return gamma;
}

int moebius(std::int64_t n) {
  require_positive(n, "moebius");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace qgap
