#include "qgap/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "qgap/error.hpp"

namespace qgap {

namespace {

// Scale a run of rationals to integers over their common denominator.
Integer to_integers(std::span<const Rational> xs, std::vector<Integer>& out) {
  Integer den = 1;
  for (const auto& x : xs)
    if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  out.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (den == 1) {
      out[i] = xs[i].get_num();
    } else {
      out[i] = den / xs[i].get_den();
      out[i] *= xs[i].get_num();
    }
  }
  return den;
}

}  // namespace

QSeries QSeries::zero(std::int64_t reach) {
  QSeries s(reach, {});
  return s;
}

QSeries QSeries::monomial(const Rational& c, std::int64_t exponent, std::int64_t reach) {
  if (reach <= exponent) throw ReachError("monomial: reach must exceed the exponent");
  std::vector<Rational> cs(static_cast<std::size_t>(reach - exponent));
  cs[0] = c;
  return QSeries(exponent, std::move(cs));
}

QSeries QSeries::one(std::int64_t terms) {
  if (terms <= 0) return zero(0);
  return monomial(1, 0, terms);
}

QSeries::QSeries(std::int64_t first, std::vector<Rational> coeffs)
    : valuation_(first), coeffs_(std::move(coeffs)) {
  normalize();
}

void QSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0) return;
  valuation_ += static_cast<std::int64_t>(lead);
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
}

const Rational& QSeries::coeff(std::int64_t n) const {
  static const Rational kZero = 0;
  if (n >= reach())
    throw ReachError("coefficient of q^" + std::to_string(n) + " requested but series is only known below q^" +
                     std::to_string(reach()));
  if (n < valuation_) return kZero;
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

const Rational& QSeries::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of a series that is zero up to its reach");
  return coeffs_.front();
}

QSeries QSeries::truncated(std::int64_t new_reach) const {
  if (new_reach > reach())
    throw ReachError("cannot extend a series from reach " + std::to_string(reach()) + " to " +
                     std::to_string(new_reach));
  if (new_reach <= valuation_) return zero(new_reach);
  return QSeries(valuation_,
                 std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (new_reach - valuation_)));
}

QSeries QSeries::truncated_terms(std::int64_t terms) const {
  return truncated(std::min(reach(), valuation_ + std::max<std::int64_t>(terms, 0)));
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  const std::int64_t end = std::min(reach(), other.reach());
  const std::int64_t start = std::min(valuation_, other.valuation_);
  if (start >= end) {
    *this = zero(end);
    return *this;
  }
  std::vector<Rational> cs(static_cast<std::size_t>(end - start));
  for (std::int64_t n = start; n < end; ++n) cs[static_cast<std::size_t>(n - start)] = coeff(n) + other.coeff(n);
  *this = QSeries(start, std::move(cs));
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) { return *this += -other; }

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    *this = zero(reach());
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t n = valuation_ + static_cast<std::int64_t>(i);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (n == 0) {
      os << qgap::to_string(mag);
      continue;
    }
    if (!unit) os << qgap::to_string(mag) << "*";
    os << "q";
    if (n != 1) os << "^" << n;
  }
  if (first) os << "0";
  os << " + O(q^" << reach() << ")";
  return os.str();
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::int64_t val = a.valuation() + b.valuation();
  const std::int64_t reach = std::min(a.reach() + b.valuation(), b.reach() + a.valuation());
  if (a.is_zero() || b.is_zero()) return QSeries::zero(reach);
  const std::size_t len = static_cast<std::size_t>(reach - val);

  std::vector<Integer> x, y;
  const Integer dx = to_integers(a.coefficients().first(len), x);
  const Integer dy = to_integers(b.coefficients().first(len), y);

  std::vector<Rational> out(len);
  Integer acc;
  const Integer den = dx * dy;
  for (std::size_t k = 0; k < len; ++k) {
    acc = 0;
    for (std::size_t i = 0; i <= k; ++i) mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), y[k - i].get_mpz_t());
    if (den == 1) {
      out[k] = acc;
    } else {
      out[k] = make_rational(acc, den);
    }
  }
  return QSeries(val, std::move(out));
}

QSeries invert(const QSeries& a) {
  if (a.is_zero()) throw DomainError("invert: series is zero up to its reach");
  const std::size_t len = static_cast<std::size_t>(a.terms());

  // u = U / D with integral U; 1/u = D / U and 1/U = sum B_n q^n / U0^{n+1}
  // where B_0 = 1 and B_n = -sum_{k=1}^n U_k U0^{k-1} B_{n-k}.
  std::vector<Integer> u;
  const Integer d = to_integers(a.coefficients(), u);
  const Integer& u0 = u[0];

  std::vector<Integer> w(len);
  Integer u0pow = 1;
  for (std::size_t k = 1; k < len; ++k) {
    w[k] = u[k] * u0pow;
    u0pow *= u0;
  }
  std::vector<Integer> big(len);
  big[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) mpz_addmul(acc.get_mpz_t(), w[k].get_mpz_t(), big[n - k].get_mpz_t());
    big[n] = -acc;
  }

  std::vector<Rational> out(len);
  const bool unit_lead = (u0 == 1 || u0 == -1) && d == 1;
  Integer den = u0;
  for (std::size_t n = 0; n < len; ++n) {
    if (unit_lead) {
      out[n] = (u0 == 1 || n % 2 == 1) ? big[n] : Integer(-big[n]);
    } else {
      out[n] = make_rational(d * big[n], den);
      den *= u0;
    }
  }
  return QSeries(-a.valuation(), std::move(out));
}

QSeries pow_int(const QSeries& a, std::int64_t e) {
  if (e == 0) return QSeries::one(a.terms());
  QSeries base = e < 0 ? invert(a) : a;
  std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  QSeries result;
  bool have = false;
  while (true) {
    if (n & 1U) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    n >>= 1U;
    if (n == 0) break;
    base = mul(base, base);
  }
  return result;
}

QSeries root(const QSeries& a, std::int64_t m) {
  if (m <= 0) throw DomainError("root: m must be positive");
  if (a.is_zero()) throw DomainError("root: series is zero up to its reach");
  if (a.valuation() % m != 0)
    throw DomainError("root: valuation " + std::to_string(a.valuation()) + " is not divisible by " + std::to_string(m));
  if (a.leading() != 1) throw DomainError("root: unit part is not monic (leading coefficient " + to_string(a.leading()) + ")");
  if (m == 1) return a;

  const auto u = a.coefficients();
  const std::size_t len = u.size();
  const Rational alpha_plus_one = Rational(1, static_cast<unsigned long>(m)) + 1;
  std::vector<Rational> b(len);
  b[0] = 1;
  Rational acc;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (u[k] == 0) continue;
      Rational factor = alpha_plus_one * static_cast<long>(k) - static_cast<long>(n);
      acc += factor * u[k] * b[n - k];
    }
    b[n] = acc / static_cast<long>(n);
  }
  return QSeries(a.valuation() / m, std::move(b));
}

QSeries derivative_D(const QSeries& a) {
  std::vector<Rational> cs(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] *= a.valuation() + static_cast<std::int64_t>(i);
  if (cs.empty()) return QSeries::zero(a.reach());
  return QSeries(a.valuation(), std::move(cs));
}

QSeries rescale(const QSeries& a, std::int64_t N) {
  if (N <= 0) throw DomainError("rescale: N must be positive");
  if (a.is_zero()) return QSeries::zero(a.reach() * N);
  const auto cs = a.coefficients();
  std::vector<Rational> out(cs.size() * static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < cs.size(); ++i) out[i * static_cast<std::size_t>(N)] = cs[i];
  return QSeries(a.valuation() * N, std::move(out));
}

Rational constant_term_of_product(const QSeries& a, const QSeries& b) {
  if (a.reach() + b.valuation() <= 0 || b.reach() + a.valuation() <= 0)
    throw ReachError("constant_term_of_product: operands are not known far enough");
  Rational c = 0;
  for (std::int64_t i = a.valuation(); i <= -b.valuation(); ++i) c += a.coeff(i) * b.coeff(-i);
  return c;
}

bool agree(const QSeries& a, const QSeries& b) {
  const std::int64_t end = std::min(a.reach(), b.reach());
  for (std::int64_t n = std::min(a.valuation(), b.valuation()); n < end; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

}  // namespace qgap
