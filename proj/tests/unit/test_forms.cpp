#include <gtest/gtest.h>

#include <thread>

#include "qgap/error.hpp"
#include "qgap/evaluator.hpp"
#include "qgap/form_expr.hpp"
#include "qgap/forms.hpp"
#include "qgap/identities.hpp"

using namespace qgap;
using namespace qgap::forms;

namespace {

// Coefficient n >= 1 of 1 + alpha sum sigma(n) q^n straight from divisors.
Rational eisenstein_coeff(std::int64_t h, std::int64_t n) {
  Integer s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(h - 1));
      s += t;
    }
  return alpha_coeff(h) * Rational(s);
}

}  // namespace

TEST(Eisenstein, LevelOneExamples) {
  const auto g4 = eisenstein_G(4, 3);
  EXPECT_EQ(g4.coeff(1), 240);
  EXPECT_EQ(g4.coeff(2), 2160);
  EXPECT_EQ(eisenstein_G(6, 2).coeff(1), -504);
  const auto g2 = eisenstein_G(2, 3);
  EXPECT_EQ(g2.coeff(1), -24);
  EXPECT_EQ(g2.coeff(2), -72);
  EXPECT_THROW(eisenstein_G(5, 3), DomainError);
}

TEST(Eisenstein, MatchesDivisorSums) {
  for (std::int64_t h : {4, 6, 8, 10, 12, 14, 20}) {
    const auto g = eisenstein_G(h, 30);
    EXPECT_EQ(g.coeff(0), 1);
    for (std::int64_t n = 1; n < 30; ++n) ASSERT_EQ(g.coeff(n), eisenstein_coeff(h, n)) << h << " " << n;
  }
}

TEST(Eisenstein, LevelTwoExamples) {
  const auto [eg, e0, ei] = level2_eisenstein(5);
  EXPECT_EQ(eg, QSeries(0, {1, 24, 24, 96, 24}));
  EXPECT_EQ(e0.coeff(1), -16);
  EXPECT_EQ(e0.coeff(2), 112);
  EXPECT_EQ(ei.valuation(), 1);
  EXPECT_EQ(ei.coeff(2), 8);
  EXPECT_EQ(eisenstein_EN_inf(2, 4, 20), einf4(20));
  const auto e36 = eisenstein_EN_inf(3, 6, 5);
  EXPECT_EQ(e36.coeff(1), 1);
  EXPECT_EQ(e36.coeff(3), 243);
}

TEST(Eisenstein, LevelTwoGeneratorsAreIntegralAndMonic) {
  for (const auto& s : {egamma2(60), e04(60), einf4(60), delta2(60), j2(60), m2(60)}) {
    EXPECT_TRUE(s.is_integral());
    EXPECT_EQ(s.leading(), 1);
  }
}

TEST(Delta, Examples) {
  const auto d = delta(4);
  EXPECT_EQ(d.valuation(), 1);
  EXPECT_EQ(d.coeff(1), 1);
  EXPECT_EQ(d.coeff(2), -24);
  EXPECT_EQ(d.coeff(3), 252);
  const auto j = j_invariant(3);
  EXPECT_EQ(j.coeff(-1), 1);
  EXPECT_EQ(j.coeff(0), 744);
  EXPECT_EQ(j.coeff(1), 196884);
}

TEST(DerivedForms, Examples) {
  EXPECT_EQ(j2(3).coeff(0), 40);
  EXPECT_EQ(m2(3).coeff(0), -24);
  EXPECT_EQ(Phi(2, 30), phi(2, 30));
  EXPECT_EQ(pow_int(Phi(3, 30), 2), phi(3, 30));
  EXPECT_EQ(phi(3, 3).valuation(), 2);
  const auto d = derived_forms(20);
  EXPECT_TRUE(agree(d.j2, d.m2 + QSeries::monomial(64, 0, 20)));
}

TEST(TSeries, Examples) {
  const auto t = t_series(2, 8, 10);
  EXPECT_EQ(t.valuation(), -3);
  EXPECT_EQ(t.leading(), 1);
  EXPECT_EQ(t_series_pole_order(2, 8), 3);
  EXPECT_EQ(t_series_eisenstein_index(14), 0);
  for (std::int64_t h = 4; h <= 40; h += 4) EXPECT_EQ(FormExpr({{Generator::T2(h), 1}}).weight(), 2 - h) << h;
  for (std::int64_t h = 2; h <= 40; h += 2) EXPECT_EQ(t_series(2, h, 3).leading(), 1) << h;
}

TEST(Dimensions, Examples) {
  EXPECT_EQ(dim_M(1, 12), 2);
  EXPECT_EQ(dim_M(1, 14), 1);
  EXPECT_EQ(dim_M(2, 8), 3);
  EXPECT_EQ(dim_M(2, 2), 1);
}

TEST(Bases, LevelTwoExamples) {
  const auto b4 = basis_M2(4, 10);
  ASSERT_EQ(b4.size(), 2u);
  EXPECT_TRUE(agree(b4[0], einf4(10)));
  EXPECT_TRUE(agree(b4[1], pow_int(egamma2(10), 2)));
  const auto b2 = basis_M2(2, 10);
  ASSERT_EQ(b2.size(), 1u);
  EXPECT_TRUE(agree(b2[0], egamma2(10)));
}

TEST(Bases, TriangularValuations) {
  for (std::int64_t h = 2; h <= 40; h += 2) {
    const auto b = basis_M2(h, 20);
    ASSERT_EQ(static_cast<std::int64_t>(b.size()), dim_M(2, h));
    std::vector<std::int64_t> vals;
    for (const auto& f : b) vals.push_back(f.valuation());
    std::sort(vals.begin(), vals.end());
    for (std::size_t d = 0; d < vals.size(); ++d) EXPECT_EQ(vals[d], static_cast<std::int64_t>(d)) << h;
  }
}

TEST(Identities, AllHoldTo200Terms) {
  for (const auto& c : identities::identity_checks(200)) EXPECT_TRUE(c.holds) << c.name << " @" << c.first_mismatch;
}

TEST(Identities, IndependentSpotChecks) {
  const std::int64_t n = 120;
  EXPECT_TRUE(agree(eisenstein_G(4, n), e04(n) + Rational(256) * einf4(n)));
  EXPECT_TRUE(agree(pow_int(egamma2(n), 2), e04(n) + Rational(64) * einf4(n)));
  EXPECT_TRUE(agree(derivative_D(j2(n)), -(egamma2(n) * e04(n) * invert(einf4(n)))));
  EXPECT_TRUE(agree(m2(n), e04(n) * invert(einf4(n))));
  // E_inf4 = q prod (1-q^{2n})^8 prod_{n odd} (1-q^n)^{-8}
  const auto prod = QSeries::monomial(1, 1, 2) *
                    product_expand([](std::int64_t k) { return k % 2 == 0 ? 8 : -8; }, n);
  EXPECT_TRUE(agree(prod, einf4(n)));
}

TEST(FormExprParse, AcceptsGrammar) {
  const auto e = FormExpr::parse(" G(4)^2*Delta^-1  Einf4 E(3, inf, 6)^-2 ");
  EXPECT_EQ(e.factors().size(), 4u);
  EXPECT_EQ(FormExpr::parse(e.to_string()), e);
  EXPECT_EQ(FormExpr::parse("Delta Delta^-3"), FormExpr::parse("Delta^-2"));
  EXPECT_EQ(FormExpr::parse("T2(12)").weight(), -10);
  EXPECT_EQ(FormExpr::parse("Delta^-2 * G(6)").pole_order(), 2);
  EXPECT_EQ(FormExpr::parse("phi(3)^-1 * Einf4").conductor(), 6);
  EXPECT_FALSE(FormExpr::parse("G(2)").is_modular());
}

TEST(FormExprParse, RejectsWithPosition) {
  try {
    FormExpr::parse("Delta^0");
    FAIL() << "zero exponent accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(FormExpr::parse("Delta^"), ParseError);
  EXPECT_THROW(FormExpr::parse("Foo"), ParseError);
  EXPECT_THROW(FormExpr::parse("G(4"), ParseError);
  EXPECT_THROW(FormExpr::parse("G(5)"), Error);
  EXPECT_THROW(FormExpr::parse("S(5,4)"), Error);
}

TEST(FormTemplate, InstantiatesPlaceholders) {
  const auto t = FormTemplate::parse("G(2a)^-1 * Einf4^-b");
  EXPECT_EQ(t.variables(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(t.instantiate({{"a", 3}, {"b", 2}}), FormExpr::parse("G(6)^-1 Einf4^-2"));
}

TEST(Evaluator, Examples) {
  const auto inv = eval_expr(FormExpr::parse("Delta^-1"), 5);
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.terms(), 5);
  EXPECT_EQ(inv.coeff(0), 24);
  EXPECT_EQ(inv.coeff(1), 324);
  EXPECT_TRUE(agree(eval_expr(FormExpr::parse("Egamma2^2 * Einf4^-1"), 3), j2(3)));
  const auto g4 = eval_expr(FormExpr::parse("G(4)"), 2);
  EXPECT_EQ(g4, QSeries(0, {1, 240}));
}

TEST(Evaluator, ConstantTermsAgreeWithFullExpansion) {
  for (const char* text : {"Delta^-2", "Einf4^-1", "E(2,inf,8)^-1", "j^3 Delta^-2", "T2(12)", "Phi(3)^-5",
                           "G(6)^3 Delta^-4", "Delta2^-3 Egamma2"}) {
    const auto e = FormExpr::parse(text);
    EXPECT_EQ(constant_term(e), eval_expr(e, e.pole_order() + 1).coeff(0)) << text;
  }
  EXPECT_EQ(constant_term(FormExpr::parse("Delta^-2")), 1224);
  EXPECT_EQ(constant_term(FormExpr::parse("Einf4^-1")), -8);
  EXPECT_EQ(constant_term(FormExpr::parse("E(2,inf,8)^-1")), -128);
}

TEST(Evaluator, ConcurrentUseGivesSameResults) {
  Evaluator ev;
  const std::vector<std::string> exprs{"Delta^-7", "j^4", "Einf4^-9 E04", "Phi(3)^-4", "G(10)^2 Delta^-3"};
  std::vector<Rational> serial;
  for (const auto& s : exprs) serial.push_back(Evaluator().constant_term(FormExpr::parse(s)));
  std::vector<std::vector<Rational>> got(4);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < got.size(); ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = 0; i < exprs.size(); ++i)
        got[t].push_back(ev.constant_term(FormExpr::parse(exprs[(i + t) % exprs.size()])));
    });
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < got.size(); ++t)
    for (std::size_t i = 0; i < exprs.size(); ++i) EXPECT_EQ(got[t][i], serial[(i + t) % exprs.size()]);
}
