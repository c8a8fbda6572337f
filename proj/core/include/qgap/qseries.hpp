#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qgap/arith.hpp"

namespace qgap {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Stores c_v, ..., c_{v+len-1} for v = valuation(). The reach is v + len:
/// the first exponent whose coefficient is NOT known. Coefficients below the
/// valuation are known zeros; asking for one at or beyond the reach throws
/// ReachError. A series that is zero up to its reach has no stored
/// coefficients and valuation() == reach().
class QSeries {
 public:
  /// The zero series known up to (but excluding) q^reach.
  static QSeries zero(std::int64_t reach);
  /// c * q^exponent known up to q^reach (reach > exponent).
  static QSeries monomial(const Rational& c, std::int64_t exponent, std::int64_t reach);
  /// The constant 1 with `terms` justified coefficients.
  static QSeries one(std::int64_t terms);

  QSeries() : QSeries(zero(0)) {}
  /// Coefficients for q^first, q^(first+1), ...; leading zeros are stripped.
  QSeries(std::int64_t first, std::vector<Rational> coeffs);

  std::int64_t valuation() const noexcept { return valuation_; }
  std::int64_t reach() const noexcept { return valuation_ + static_cast<std::int64_t>(coeffs_.size()); }
  /// Number of justified coefficients from the valuation on.
  std::int64_t terms() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Pole order at infinity, max(0, -valuation).
  std::int64_t pole_order() const noexcept { return valuation_ < 0 ? -valuation_ : 0; }

  const Rational& coeff(std::int64_t n) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Drop every coefficient at exponent >= new_reach (new_reach <= reach()).
  QSeries truncated(std::int64_t new_reach) const;
  /// Keep at most `terms` coefficients from the valuation.
  QSeries truncated_terms(std::int64_t terms) const;

  bool is_integral() const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);

  /// "q^-1 + 24 + 324*q + O(q^2)"
  std::string to_string() const;

  /// Same valuation, reach and coefficients.
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  void normalize();

  std::int64_t valuation_ = 0;
  std::vector<Rational> coeffs_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(QSeries a, const Rational& c);
QSeries operator*(const Rational& c, QSeries a);
QSeries operator*(const QSeries& a, const QSeries& b);

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
/// Multiplicative inverse; the valuation is negated and the number of
/// justified terms is preserved.
QSeries invert(const QSeries& a);
QSeries pow_int(const QSeries& a, std::int64_t e);
/// The m-th root with monic unit part: requires m | valuation and leading coefficient 1.
QSeries root(const QSeries& a, std::int64_t m);
/// D = q d/dq: c_n -> n c_n.
QSeries derivative_D(const QSeries& a);
/// q -> q^N.
QSeries rescale(const QSeries& a, std::int64_t N);

/// Constant term of a*b without forming the product; both operands must be
/// known far enough (a.reach + b.valuation > 0 and vice versa).
Rational constant_term_of_product(const QSeries& a, const QSeries& b);

/// Agreement of two series on every exponent below min(reach).
bool agree(const QSeries& a, const QSeries& b);

/// Exponent e_n of the factor (1 - q^n)^{e_n}, n >= 1.
using ProductExponents = std::function<std::int64_t(std::int64_t)>;

/// prod_{n>=1} (1 - q^n)^{e_n} to `prec` terms (exponents 0 .. prec-1), via
/// the divisor-sum recursion n p(n) = sum_k f(k) p(n-k).
QSeries product_expand(const ProductExponents& exponents, std::int64_t prec);

/// E_{inf,4}^{-s} = q^{-s} sum R(n) q^n with R(0) = 1 and
/// R(n) = (8s/n) sum_{a=1}^n sigma_1^alt(a) R(n-a), to `prec` terms.
QSeries neg_power_Einf4(std::int64_t s, std::int64_t prec);

}  // namespace qgap
