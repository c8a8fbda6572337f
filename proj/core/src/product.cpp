#include "qgap/error.hpp"
#include "qgap/qseries.hpp"

namespace qgap {

QSeries product_expand(const ProductExponents& exponents, std::int64_t prec) {
  if (prec <= 0) throw DomainError("product_expand: prec must be positive");
  const std::size_t len = static_cast<std::size_t>(prec);

  // prod (1-q^n)^{e_n} = prod (1-q^n)^{-f(n)/n} with f(n) = -n e_n;
  // f_A(k) = sum_{d|k} f(d).
  std::vector<Integer> fa(len);
  for (std::size_t d = 1; d < len; ++d) {
    const std::int64_t e = exponents(static_cast<std::int64_t>(d));
    if (e == 0) continue;
    const Integer f = Integer(-static_cast<long>(d)) * static_cast<long>(e);
    for (std::size_t k = d; k < len; k += d) fa[k] += f;
  }

  std::vector<Integer> p(len);
  p[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (fa[k] != 0) mpz_addmul(acc.get_mpz_t(), fa[k].get_mpz_t(), p[n - k].get_mpz_t());
    mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return QSeries(0, std::vector<Rational>(p.begin(), p.end()));
}

QSeries neg_power_Einf4(std::int64_t s, std::int64_t prec) {
  if (s <= 0) throw DomainError("neg_power_Einf4: s must be positive");
  if (prec <= 0) throw DomainError("neg_power_Einf4: prec must be positive");
  const std::size_t len = static_cast<std::size_t>(prec);

  std::vector<Integer> alt(len);
  for (std::size_t a = 1; a < len; ++a) alt[a] = sigma_alt(static_cast<std::int64_t>(a), 1);

  std::vector<Integer> r(len);
  r[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t a = 1; a <= n; ++a) mpz_addmul(acc.get_mpz_t(), alt[a].get_mpz_t(), r[n - a].get_mpz_t());
    acc *= 8 * s;
    mpz_divexact_ui(r[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return QSeries(-s, std::vector<Rational>(r.begin(), r.end()));
}

}  // namespace qgap
