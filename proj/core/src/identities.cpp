#include "qgap/identities.hpp"

#include "qgap/error.hpp"
#include "qgap/forms.hpp"

namespace qgap::identities {

IdentityCheck compare_series(std::string name, const QSeries& lhs, const QSeries& rhs, std::int64_t reach) {
  if (lhs.reach() < reach || rhs.reach() < reach)
    throw ReachError("identity '" + name + "': sides not known through q^" + std::to_string(reach - 1));
  IdentityCheck c{std::move(name), 0, 0, true};
  const std::int64_t start = std::min(lhs.valuation(), rhs.valuation());
  c.terms = reach - start;
  for (std::int64_t n = start; n < reach; ++n) {
    const Rational zero = 0;
    const Rational& a = n < lhs.valuation() ? zero : lhs.coeff(n);
    const Rational& b = n < rhs.valuation() ? zero : rhs.coeff(n);
    if (a != b) {
      c.holds = false;
      c.first_mismatch = n;
      break;
    }
  }
  return c;
}

namespace {

QSeries shifted(const QSeries& s, std::int64_t k) {
  return QSeries(s.valuation() + k, std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()));
}

}  // namespace

std::vector<IdentityCheck> identity_checks(std::int64_t terms) {
  if (terms < 1) throw DomainError("identity_checks: terms must be positive");
  using namespace forms;
  const std::int64_t n = terms;
  const auto l2 = level2_eisenstein(n + 2);
  std::vector<IdentityCheck> out;

  out.push_back(compare_series("G4 = E04 + 256*Einf4", eisenstein_G(4, n), l2.e04 + l2.einf4 * Rational(256), n));
  out.push_back(compare_series("Egamma2^2 = E04 + 64*Einf4", pow_int(l2.egamma2, 2), l2.e04 + l2.einf4 * Rational(64),
                               n));

  const QSeries einf4_product =
      shifted(product_expand([](std::int64_t k) { return k % 2 == 0 ? 8 : -8; }, n), 1);
  out.push_back(compare_series("Einf4 = q*prod(1-q^n)^(8 even, -8 odd)", l2.einf4, einf4_product, n + 1));

  const QSeries e04_product = product_expand([](std::int64_t k) { return k % 2 == 0 ? 8 : 16; }, n);
  out.push_back(compare_series("E04 = prod(1-q^n)^(16 odd, 8 even)", l2.e04, e04_product, n));

  // Both sides of the derivative identity start at q^-1.
  const QSeries dj2 = derivative_D(j2(n + 1));
  const QSeries rhs = -(l2.egamma2 * l2.e04 * invert(l2.einf4));
  out.push_back(compare_series("D j2 = -Egamma2*E04/Einf4", dj2, rhs, n - 1));

  const QSeries m = m2(n + 1);
  out.push_back(compare_series("m2 = E04/Einf4", m, l2.e04 * invert(l2.einf4), n - 1));
  const QSeries eta_quotient =
      shifted(product_expand([](std::int64_t k) { return k % 2 == 0 ? 0 : 24; }, n), -1);
  out.push_back(compare_series("m2 = q^-1*prod(1-q^n)^(24 odd)", m, eta_quotient, n - 1));

  const QSeries g4c = pow_int(eisenstein_G(4, n + 1), 3);
  const QSeries g6s = pow_int(eisenstein_G(6, n + 1), 2);
  out.push_back(compare_series("1728*Delta = G4^3 - G6^2", delta(n) * Rational(1728), g4c - g6s, n + 1));
  out.push_back(compare_series("j = G4^3/Delta", j_invariant(n + 1), g4c * invert(delta(n + 1)), n - 1));
  return out;
}

}  // namespace qgap::identities
