#include "qgap/congruence.hpp"

#include "qgap/error.hpp"

namespace qgap::congruence {

namespace {

Rational prime_power(std::int64_t p, std::int64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return Rational(r);
}

std::string ord_text(std::int64_t p, const POrder& o) {
  return "ord" + std::to_string(p) + "=" + o.to_string();
}

ClauseVerdict order_clause(std::string id, std::int64_t p, std::int64_t expected, const Rational& c0) {
  ClauseVerdict v{std::move(id), Verdict::Fail, ord_text(p, POrder::finite(expected)), ord_text(p, ord_p(c0, p))};
  if (c0 == 0) v.verdict = Verdict::ZeroConstantTerm;
  else if (ord_p(c0, p) == POrder::finite(expected)) v.verdict = Verdict::Pass;
  return v;
}

ClauseVerdict divisibility_clause(std::string id, std::int64_t p, std::int64_t e, const Rational& c0) {
  ClauseVerdict v{std::move(id), Verdict::Fail, "ord" + std::to_string(p) + ">=" + std::to_string(e),
                  ord_text(p, ord_p(c0, p))};
  // Zero is divisible by every prime power.
  if (divisible_by_prime_power(c0, p, e)) v.verdict = Verdict::Pass;
  return v;
}

// c0 = sign * 3^g (mod 3^(g+1)).
ClauseVerdict signed_power_clause(std::string id, int sign, std::int64_t g, const Rational& c0) {
  ClauseVerdict v{std::move(id), Verdict::Fail,
                  std::string(sign > 0 ? "" : "-") + "3^" + std::to_string(g) + " mod 3^" + std::to_string(g + 1),
                  ord_text(3, ord_p(c0, 3))};
  if (c0 == 0) {
    v.verdict = Verdict::ZeroConstantTerm;
    return v;
  }
  if (congruent_mod_prime_power(c0, prime_power(3, g) * sign, 3, g + 1)) v.verdict = Verdict::Pass;
  else if (congruent_mod_prime_power(c0, prime_power(3, g) * -sign, 3, g + 1))
    v.observed += sign > 0 ? " (sign -)" : " (sign +)";
  return v;
}

void require_pole(std::int64_t s) {
  if (s <= 0) throw DomainError("congruence rules need a pole at infinity (s >= 1), got s = " + std::to_string(s));
}

ClauseVerdict two_adic(const std::string& prefix, std::int64_t w, std::int64_t s, const Rational& c0) {
  const std::int64_t beta = digit_sum(s, 2);
  switch (floor_mod(w, 4)) {
    case 0: return order_clause(prefix + "a", 2, 3 * beta, c0);
    case 2: return divisibility_clause(prefix + "b", 2, 4 * beta, c0);
    default: return {prefix + "a/b", Verdict::NotApplicable, "odd weight", ""};
  }
}

ClauseVerdict three_adic(const std::string& prefix, std::int64_t w, std::int64_t s, const Rational& c0) {
  const std::int64_t gamma = digit_sum(s, 3);
  const std::int64_t L = largest_digit(s, 3);
  switch (floor_mod(w, 3)) {
    case 0: return signed_power_clause(prefix + "c", s % 2 == 0 ? 1 : -1, gamma, c0);
    case 1:
      if (L == 1) return signed_power_clause(prefix + "d", 1, gamma, c0);
      return divisibility_clause(prefix + "e", 3, gamma + 1, c0);
    default: return divisibility_clause(prefix + "f", 3, gamma + 1, c0);
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::ZeroConstantTerm: return "ZERO_CONSTANT_TERM";
    case Verdict::Experimental: return "EXPERIMENTAL";
  }
  return "?";
}

bool is_failure(Verdict v) { return v == Verdict::Fail || v == Verdict::ZeroConstantTerm; }

bool congruent_mod_prime_power(const Rational& c, const Rational& a, std::int64_t p, std::int64_t e) {
  return ord_p(Rational(c - a), p) >= POrder::finite(e);
}

bool divisible_by_prime_power(const Rational& c, std::int64_t p, std::int64_t e) {
  return ord_p(c, p) >= POrder::finite(e);
}

bool in_C2(std::int64_t s, const Rational& c0) {
  require_pole(s);
  return c0 != 0 && ord_p(c0, 2) == POrder::finite(3 * digit_sum(s, 2));
}

bool in_C3(std::int64_t s, const Rational& c0) {
  require_pole(s);
  return c0 != 0 && ord_p(c0, 3) == POrder::finite(digit_sum(s, 3));
}

bool in_D3(std::int64_t s, const Rational& c0) {
  const std::int64_t g = digit_sum(s, 3);
  return in_C3(s, c0) && congruent_mod_prime_power(c0, prime_power(3, g) * (s % 2 == 0 ? 1 : -1), 3, g + 1);
}

bool in_E3(std::int64_t s, const Rational& c0) {
  const std::int64_t g = digit_sum(s, 3);
  return in_C3(s, c0) && congruent_mod_prime_power(c0, prime_power(3, g), 3, g + 1);
}

std::vector<ClauseVerdict> classify_conductor1(std::int64_t w, std::int64_t s, const Rational& c0) {
  require_pole(s);
  return {two_adic("1", w, s, c0), three_adic("1", w, s, c0)};
}

std::vector<ClauseVerdict> classify_conductor2(std::int64_t w, std::int64_t s, const Rational& c0) {
  require_pole(s);
  return {two_adic("2", w, s, c0)};
}

std::vector<ClauseVerdict> classify_conductor3(std::int64_t w, std::int64_t s, const Rational& c0) {
  require_pole(s);
  return {three_adic("3", w, s, c0)};
}

std::vector<ClauseVerdict> classify(std::int64_t conductor, std::int64_t w, std::int64_t s, const Rational& c0) {
  if (s <= 0) return {{"none", Verdict::NotApplicable, "no pole at infinity", ""}};
  switch (conductor) {
    case 1: return classify_conductor1(w, s, c0);
    case 2: return classify_conductor2(w, s, c0);
    case 3: return classify_conductor3(w, s, c0);
    default: return {{"none", Verdict::NotApplicable, "conductor " + std::to_string(conductor), ""}};
  }
}

ClauseVerdict deviation_rule(std::int64_t N, std::int64_t k, std::int64_t a, const Rational& c0) {
  if (a <= 0) throw DomainError("deviation_rule: exponent a must be positive");
  const std::int64_t d3 = digit_sum(a, 3);
  if (N == 2 && k % 4 == 0 && k >= 8 && a % 2 == 1) {
    const std::int64_t expected = 3 * digit_sum(a, 2) + ord_p(a + 1, 2) + k - 5;
    return order_clause("dev2-order", 2, expected, c0);
  }
  if (N == 3 && k % 6 == 0 && k >= 12) {
    if (a % 3 == 1) return signed_power_clause("dev3-residue", (a + 1) % 2 == 0 ? 1 : -1, d3, c0);
    if (a % 3 == 2) {
      const std::int64_t delta = d3 + ord_p(a + 1, 3);
      ClauseVerdict v = order_clause("dev3-order", 3, delta, c0);
      if (v.verdict == Verdict::Pass) {
        const bool plus = congruent_mod_prime_power(c0, prime_power(3, delta), 3, delta + 1);
        v.observed += plus ? " (sign +)" : " (sign -)";
      }
      return v;
    }
  }
  if (N == 3 && k % 6 == 2 && k >= 8 && a % 3 == 1 && largest_digit(a, 3) == 1)
    return signed_power_clause("dev3-digits", -1, d3, c0);
  return {"deviation", Verdict::NotApplicable, "outside deviation windows", ""};
}

Verdict combine(const std::vector<ClauseVerdict>& clauses) {
  bool pass = false;
  for (const auto& c : clauses) {
    if (c.verdict == Verdict::ZeroConstantTerm) return Verdict::ZeroConstantTerm;
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Pass) pass = true;
  }
  return pass ? Verdict::Pass : Verdict::NotApplicable;
}

}  // namespace qgap::congruence
