#include <gtest/gtest.h>

#include "qgap/error.hpp"
#include "qgap/forms.hpp"
#include "qgap/siegel.hpp"

using namespace qgap;
using namespace qgap::siegel;

namespace {

const CongruenceCheck* find_check(const std::vector<CongruenceCheck>& checks, const std::string& family,
                               const std::string& instance) {
  for (const auto& c : checks)
    if (c.family == family && c.instance == instance) return &c;
  return nullptr;
}

}  // namespace

TEST(Satz, Examples) {
  EXPECT_EQ(satz1_check(2, 4, forms::einf4(5), "Einf4").verdict, Verdict::Pass);
  EXPECT_EQ(satz1_check(1, 4, forms::eisenstein_G(4, 5), "G4").c0, 0);
  EXPECT_THROW(satz1_check(1, 0, QSeries::one(5)), DomainError);
  EXPECT_THROW(satz1_check(2, 4, forms::j2(5)), DomainError);
}

TEST(Satz, DirectSeriesComputation) {
  // c0[T_4 G_4] straight from the product, no shortcut.
  const auto t4 = forms::t_series(1, 4, 4);
  EXPECT_EQ((t4 * forms::eisenstein_G(4, 4)).coeff(0), 0);
  // A form outside M(2, 8) generally gives a nonzero constant term.
  EXPECT_NE(satz1_check(2, 8, forms::eisenstein_G(4, 10) * forms::egamma2(10)).c0, 0);
}

TEST(Satz, BasesUpTo40) {
  for (const auto& r : satz_suite(2, 2, 40)) EXPECT_EQ(r.verdict, Verdict::Pass) << r.h << " " << r.form_id;
  for (const auto& r : satz_suite(1, 4, 36)) EXPECT_EQ(r.verdict, Verdict::Pass) << r.h << " " << r.form_id;
}

TEST(T2ConstantTerm, Signs) {
  const auto t8 = constant_term_T2(8);
  EXPECT_EQ(t8.r, 3);
  EXPECT_EQ(t8.expected_sign, 1);
  EXPECT_GT(t8.c0, 0);
  const auto t4 = constant_term_T2(4);
  EXPECT_EQ(t4.r, 2);
  EXPECT_LT(t4.c0, 0);
  EXPECT_EQ(t4.c0, -240);
  const auto t12 = constant_term_T2(12);
  EXPECT_EQ(t12.c0, -196560);
  EXPECT_TRUE(congruence::congruent_mod_prime_power(t12.c0, Rational(16), 2, 5));
  for (std::int64_t h = 4; h <= 40; h += 4) EXPECT_EQ(constant_term_T2(h).verdict, Verdict::Pass) << h;
  EXPECT_THROW(constant_term_T2(6), DomainError);
}

TEST(Gap, Examples) {
  const auto eg = gap_check(2, {{"Egamma2", forms::egamma2(5)}});
  EXPECT_EQ(eg.at(0).first_nonzero_index, 1);
  EXPECT_EQ(eg.at(0).bound, 2);
  EXPECT_EQ(eg.at(0).verdict, Verdict::Pass);
  const auto g4 = forms::e04(5) + Rational(256) * forms::einf4(5);
  const auto r = gap_check(4, {{"E04", forms::e04(5)}, {"G4", g4}});
  EXPECT_EQ(r.at(0).bound, 2);
  EXPECT_EQ(r.at(0).first_nonzero_index, 1);
  EXPECT_EQ(r.at(1).first_nonzero_index, 1);
  EXPECT_THROW(gap_check(4, {{"Einf4", forms::einf4(5)}}), DomainError);
}

TEST(Gap, BoundViolationIsReported) {
  // 1 + q^3 is not a level-two form; with r(2,4) = 2 the bound is exceeded.
  const auto r = gap_check(4, {{"fake", QSeries(0, {1, 0, 0, 1})}});
  EXPECT_EQ(r.at(0).verdict, Verdict::Fail);
}

TEST(Gap, SeededSuiteUpTo40) {
  const auto a = gap_suite(2, 40, 20, 20240607);
  const auto b = gap_suite(2, 40, 20, 20240607);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].verdict, Verdict::Pass) << a[i].h << " " << a[i].form_id;
    EXPECT_EQ(a[i].form_id, b[i].form_id);
    EXPECT_EQ(a[i].within_sharper_bound.has_value(), a[i].h % 4 == 2);
  }
}

TEST(ConstantTermCongruences, Instances) {
  const auto checks = constant_term_congruences();
  for (const auto& c : checks) EXPECT_EQ(c.verdict, Verdict::Pass) << c.family << " " << c.instance;
  for (std::int64_t s = 1; s <= 64; s *= 2)
    EXPECT_NE(find_check(checks, kOrderEinf4, "Einf4^-" + std::to_string(s)), nullptr) << s;
  const auto* d3 = find_check(checks, kOrderDelta, "Delta^-3");
  ASSERT_NE(d3, nullptr);
  EXPECT_EQ(d3->predicted, "ord2=6");
  for (const char* t : {"T2(10)", "T2(26)", "T2(58)", "T2(12)", "T2(28)", "T2(60)", "T(20)"})
    EXPECT_NE(find_check(checks, kResidueT, t), nullptr) << t;
}
