#include <gtest/gtest.h>

#include "properties.hpp"
#include "qgap/error.hpp"
#include "qgap/forms.hpp"
#include "qgap/qseries.hpp"

using namespace qgap;

namespace {

QSeries poly(std::int64_t v, std::vector<std::int64_t> cs) {
  std::vector<Rational> r(cs.begin(), cs.end());
  return QSeries(v, r);
}

// q prod (1-q^n)^24 by repeated polynomial multiplication, exponents <= 10.
std::vector<std::int64_t> naive_delta() {
  std::vector<std::int64_t> p(11, 0);
  p[1] = 1;
  for (int n = 1; n <= 10; ++n)
    for (int t = 0; t < 24; ++t)
      for (int i = 10; i >= n; --i) p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - n)];
  return p;
}

constexpr std::uint64_t kSeed = 0x5eed;
constexpr int kCases = 250;

}  // namespace

TEST(QSeries, MulAndAddExamples) {
  EXPECT_TRUE(agree(poly(-1, {1, 0, 0}) * poly(1, {1, 0, 0}), QSeries::one(3)));
  const auto p = poly(0, {1, 1, 0, 0}) * poly(0, {1, -1, 0, 0});
  EXPECT_EQ(p, poly(0, {1, 0, -1, 0}));
  const auto s = poly(-2, {1, 0, 3, 0}) + poly(-2, {-1, 0, 0, 0});
  EXPECT_EQ(s.valuation(), 0);
  EXPECT_EQ(s.coeff(0), 3);
  EXPECT_EQ(s.reach(), 2);
}

TEST(QSeries, ReachIsEnforced) {
  const auto a = poly(0, {1, 2, 3});
  EXPECT_THROW(a.coeff(3), ReachError);
  EXPECT_EQ(a.coeff(-5), 0);
  const auto b = poly(2, {1, 1});
  EXPECT_EQ((a * b).reach(), 4);
  EXPECT_EQ((a + b).reach(), 3);
}

TEST(QSeries, InvertExamples) {
  const auto geo = invert(poly(0, {1, -1, 0, 0, 0, 0}));
  for (int n = 0; n < 6; ++n) EXPECT_EQ(geo.coeff(n), 1);
  EXPECT_EQ(invert(poly(1, {1})), poly(-1, {1}));
  const auto d = forms::delta(12);
  EXPECT_TRUE(agree(d * invert(d), QSeries::one(12)));
}

TEST(QSeries, PowExamples) {
  EXPECT_TRUE(agree(pow_int(poly(0, {1, 5, 2}), 0), QSeries::one(3)));
  EXPECT_EQ(pow_int(poly(0, {1, 1, 0}), 2), poly(0, {1, 2, 1}));
  const auto inv = pow_int(forms::delta(5), -1);
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.coeff(-1), 1);
  EXPECT_EQ(inv.coeff(0), 24);
  EXPECT_EQ(inv.coeff(1), 324);
}

TEST(QSeries, RootExamples) {
  EXPECT_EQ(root(poly(2, {1}), 2), poly(1, {1}));
  EXPECT_EQ(root(poly(0, {1, 2, 1, 0}), 2), poly(0, {1, 1, 0, 0}));
  const auto phi3 = forms::phi(3, 30);
  EXPECT_EQ(pow_int(root(phi3, 2), 2), phi3);
  EXPECT_THROW(root(poly(1, {1, 1}), 2), DomainError);
  EXPECT_THROW(root(poly(0, {2, 1}), 2), DomainError);
}

TEST(QSeries, DerivativeExamples) {
  EXPECT_TRUE(derivative_D(poly(0, {7, 0, 0})).is_zero());
  const std::int64_t r = 3;
  const auto d = derivative_D(poly(-r, {1, 0}));
  EXPECT_EQ(d.coeff(-r), -r);
  const auto j = forms::j_invariant(10);
  EXPECT_EQ(derivative_D(j).coeff(0), 0);
}

TEST(QSeries, RescaleExamples) {
  EXPECT_EQ(rescale(poly(1, {1}), 2).coeff(2), 1);
  const auto r = rescale(poly(0, {1, 1, 1}), 3);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(r.coeff(n), n % 3 == 0 ? 1 : 0) << n;
  const auto d = forms::delta(20);
  const auto ratio = rescale(d, 2) * invert(d);
  EXPECT_EQ(ratio.valuation(), 1);
  EXPECT_TRUE(agree(ratio, forms::phi(2, 20)));
}

TEST(ProductExpand, Examples) {
  const auto naive = naive_delta();
  const auto d = QSeries::monomial(1, 1, 11) * product_expand([](std::int64_t) { return 24; }, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(d.coeff(n), naive[static_cast<std::size_t>(n)]) << n;
  EXPECT_EQ(d.coeff(2), -24);
  const auto parts = product_expand([](std::int64_t) { return -1; }, 5);
  EXPECT_EQ(parts, poly(0, {1, 1, 2, 3, 5}));
  EXPECT_EQ(product_expand([](std::int64_t) { return 0; }, 4), QSeries::one(4));
  EXPECT_THROW(product_expand([](std::int64_t) { return 1; }, 0), DomainError);
}

TEST(NegPowerEinf4, Examples) {
  const auto R = neg_power_Einf4(1, 50);
  EXPECT_EQ(R.coeff(-1), 1);
  EXPECT_EQ(R, invert(forms::einf4(50)));
}

TEST(ConstantTermOfProduct, MatchesFullProduct) {
  const auto a = pow_int(forms::delta(8), -3);
  const auto b = forms::eisenstein_G(4, 8);
  EXPECT_EQ(constant_term_of_product(a, b), (a * b).coeff(0));
}

// Seeded property suites, >= 200 cases each.

TEST(QSeriesProperty, RingAssociativity) {
  const auto r = qgap::props::ring_associativity(kSeed, kCases);
  EXPECT_GE(r.cases, 200);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, RingCommutativity) {
  const auto r = qgap::props::ring_commutativity(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, RingDistributivity) {
  const auto r = qgap::props::ring_distributivity(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, InvertRoundTrip) {
  const auto r = qgap::props::invert_roundtrip(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, RootRoundTrip) {
  const auto r = qgap::props::root_roundtrip(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, Leibniz) {
  const auto r = qgap::props::leibniz_rule(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, ProductExpandInverse) {
  const auto r = qgap::props::product_expand_inverse(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, NegPowerEinf4MatchesGenericPower) {
  const auto r = qgap::props::neg_power_oracle(kSeed, kCases);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QSeriesProperty, RSignAlternation) {
  const auto r = qgap::props::r_sign_alternation();
  EXPECT_EQ(r.cases, 64 * 201);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
