#include "qgap/siegel.hpp"

#include <random>

#include "qgap/error.hpp"
#include "qgap/evaluator.hpp"
#include "qgap/forms.hpp"

namespace qgap::siegel {

namespace {

void require_even_positive(std::int64_t h) {
  if (h <= 0 || h % 2 != 0) throw DomainError("weight must be even and positive, got " + std::to_string(h));
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

CongruenceCheck congruence_check(std::string family, std::string instance, const Rational& c0, std::int64_t residue,
                                  std::int64_t modulus_exp) {
  CongruenceCheck t{std::move(family), std::move(instance),
                    std::to_string(residue) + " mod 2^" + std::to_string(modulus_exp), to_string(c0), Verdict::Fail};
  if (congruence::congruent_mod_prime_power(c0, Rational(residue), 2, modulus_exp)) t.verdict = Verdict::Pass;
  return t;
}

CongruenceCheck order_check(std::string family, std::string instance, const Rational& c0, std::int64_t expected) {
  const POrder observed = ord_p(c0, 2);
  return {std::move(family), std::move(instance), "ord2=" + std::to_string(expected), "ord2=" + observed.to_string(),
          observed == POrder::finite(expected) ? Verdict::Pass : Verdict::Fail};
}

}  // namespace

SatzResult satz1_check(std::int64_t level, std::int64_t h, const QSeries& f, std::string form_id) {
  if (level != 1 && level != 2) throw DomainError("satz1_check: level must be 1 or 2");
  require_even_positive(h);
  if (level == 1 && h < 4) throw DomainError("satz1_check: T_h needs h >= 4 at level one");
  if (!f.is_zero() && f.valuation() < 0) throw DomainError("satz1_check: f must be holomorphic at infinity");
  const std::int64_t pole = forms::t_series_pole_order(level, h);
  if (f.reach() <= pole)
    throw ReachError("satz1_check: f must be known through q^" + std::to_string(pole));
  const QSeries t = forms::t_series(level, h, pole + 1);
  SatzResult r{level, h, std::move(form_id), constant_term_of_product(t, f), Verdict::Fail};
  if (r.c0 == 0) r.verdict = Verdict::Pass;
  return r;
}

std::vector<SatzResult> satz_suite(std::int64_t level, std::int64_t h_min, std::int64_t h_max) {
  std::vector<SatzResult> out;
  const std::int64_t lowest = level == 1 ? 4 : 2;
  for (std::int64_t h = std::max(h_min, lowest); h <= h_max; ++h) {
    if (h % 2 != 0) continue;
    const std::int64_t prec = forms::t_series_pole_order(level, h) + 1;
    const auto basis = level == 1 ? forms::basis_M1(h, prec) : forms::basis_M2(h, prec);
    for (std::size_t i = 0; i < basis.size(); ++i)
      out.push_back(satz1_check(level, h, basis[i], "M(" + std::to_string(level) + "," + std::to_string(h) + ")[" +
                                                        std::to_string(i) + "]"));
  }
  return out;
}

T2ConstantTerm constant_term_T2(std::int64_t h) {
  if (h < 4 || h % 4 != 0) throw DomainError("constant_term_T2 needs h = 0 mod 4, h >= 4; got " + std::to_string(h));
  T2ConstantTerm t;
  t.h = h;
  t.r = forms::dim_M(2, h);
  t.c0 = forms::t_series(2, h, t.r + 1).coeff(0);
  t.expected_sign = t.r % 2 == 1 ? 1 : -1;
  if (sgn(t.c0) == t.expected_sign) t.verdict = Verdict::Pass;
  return t;
}

std::vector<GapCheckResult> gap_check(std::int64_t h, const std::vector<NamedForm>& forms) {
  require_even_positive(h);
  const std::int64_t r = forms::dim_M(2, h);
  const std::int64_t bound = h % 4 == 0 ? r : 2 * r;
  std::vector<GapCheckResult> out;
  for (const auto& f : forms) {
    const QSeries& s = f.series;
    if (s.is_zero() || s.valuation() != 0)
      throw DomainError("gap_check: form '" + f.id + "' must have a nonzero constant term");
    if (s.reach() <= bound)
      throw ReachError("gap_check: form '" + f.id + "' must be known through q^" + std::to_string(bound));
    GapCheckResult g;
    g.h = h;
    g.r = r;
    g.bound = bound;
    g.form_id = f.id;
    g.first_nonzero_index = s.reach();
    for (std::int64_t n = 1; n < s.reach(); ++n) {
      if (s.coeff(n) != 0) {
        g.first_nonzero_index = n;
        break;
      }
    }
    g.verdict = g.first_nonzero_index <= bound ? Verdict::Pass : Verdict::Fail;
    if (h % 4 == 2) g.within_sharper_bound = g.first_nonzero_index <= r + 1;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<NamedForm> gap_forms(std::int64_t h, int random_count, std::uint64_t seed) {
  require_even_positive(h);
  const std::int64_t r = forms::dim_M(2, h);
  const std::int64_t prec = (h % 4 == 0 ? r : 2 * r) + 1;
  const auto basis = forms::basis_M2(h, prec);
  std::vector<NamedForm> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && basis[i].valuation() == 0)
      out.push_back({"M(2," + std::to_string(h) + ")[" + std::to_string(i) + "]", basis[i]});
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(h));
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int k = 0; k < random_count; ++k) {
    QSeries sum = QSeries::zero(prec);
    std::string id = "rand" + std::to_string(k) + "(";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      int c = coeff(rng);
      // The constant term comes from the valuation-0 element alone.
      if (basis[i].valuation() == 0)
        while (c == 0) c = coeff(rng);
      sum += basis[i] * Rational(c);
      id += (i ? "," : "") + std::to_string(c);
    }
    out.push_back({id + ")", sum});
  }
  return out;
}

std::vector<GapCheckResult> gap_suite(std::int64_t h_min, std::int64_t h_max, int random_count,
                                      std::uint64_t seed) {
  std::vector<GapCheckResult> out;
  for (std::int64_t h = std::max<std::int64_t>(h_min, 2); h <= h_max; ++h) {
    if (h % 2 != 0) continue;
    auto part = gap_check(h, gap_forms(h, random_count, seed));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CongruenceCheck> constant_term_congruences(const CongruenceOptions& options) {
  std::vector<CongruenceCheck> out;
  auto& ev = forms::shared_evaluator();
  using forms::FormExpr;
  using forms::Generator;

  for (std::int64_t s = 1; s <= options.einf4_s_max; s *= 2) {
    const Rational c0 = ev.constant_term(FormExpr({{Generator::Einf4(), -s}}));
    out.push_back(order_check(kOrderEinf4, "Einf4^-" + std::to_string(s), c0, 3));
  }

  for (std::int64_t s = 1; s <= options.delta_s_max; ++s) {
    std::int64_t odd = s;
    while (odd % 2 == 0) odd /= 2;
    if (odd != 1 && odd != 3 && odd != 5) continue;
    const Rational c0 = ev.constant_term(FormExpr({{Generator::Delta(), -s}}));
    out.push_back(order_check(kOrderDelta, "Delta^-" + std::to_string(s), c0, 3 * digit_sum(s, 2)));
  }

  for (std::int64_t h = 4; h <= options.t_h_max; h += 2) {
    const std::int64_t r = forms::dim_M(1, h);
    const std::int64_t residue = h % 12 == 8 ? 16 : h % 12 == 2 ? 8 : 0;
    if (residue == 0 || r < 2 || !is_power_of_two(r)) continue;
    const Rational c0 = forms::t_series(1, h, forms::t_series_pole_order(1, h) + 1).coeff(0);
    out.push_back(congruence_check(kResidueT, "T(" + std::to_string(h) + ")", c0, residue, 5));
  }

  for (std::int64_t p = 8; p - 6 <= options.t_h_max; p *= 2) {
    for (const auto& [h, residue, e] : {std::tuple{p - 6, 8, 4}, std::tuple{p - 4, 16, 5}}) {
      if (h <= 0 || h > options.t_h_max) continue;
      const Rational c0 = forms::t_series(2, h, forms::t_series_pole_order(2, h) + 1).coeff(0);
      out.push_back(congruence_check(kResidueT, "T2(" + std::to_string(h) + ")", c0, residue, e));
    }
  }
  return out;
}

}  // namespace qgap::siegel
