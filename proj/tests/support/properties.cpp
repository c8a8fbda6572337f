#include "properties.hpp"

#include "qgap/forms.hpp"

namespace qgap::props {

std::int64_t SeriesGen::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational SeriesGen::small_rational() { return make_rational(uniform(-9, 9), uniform(1, 4)); }

Rational SeriesGen::nonzero_rational() {
  Rational c;
  do c = small_rational();
  while (c == 0);
  return c;
}

QSeries SeriesGen::series(std::int64_t vlo, std::int64_t vhi, std::int64_t max_terms) {
  const std::int64_t v = uniform(vlo, vhi);
  std::vector<Rational> cs(static_cast<std::size_t>(uniform(1, max_terms)));
  cs[0] = nonzero_rational();
  for (std::size_t i = 1; i < cs.size(); ++i) cs[i] = small_rational();
  return QSeries(v, std::move(cs));
}

QSeries SeriesGen::monic(std::int64_t v, std::int64_t terms) {
  std::vector<Rational> cs(static_cast<std::size_t>(terms));
  cs[0] = 1;
  for (std::size_t i = 1; i < cs.size(); ++i) cs[i] = small_rational();
  return QSeries(v, std::move(cs));
}

namespace {

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

// A case is only meaningful if something survives the truncation.
bool same(const QSeries& a, const QSeries& b) { return a.reach() == b.reach() && agree(a, b); }

}  // namespace

PropertyResult ring_associativity(std::uint64_t seed, int cases) {
  PropertyResult r{"ring associativity", 0, 0, {}};
  SeriesGen g(seed);
  for (int i = 0; i < cases; ++i) {
    const auto a = g.series(-3, 3, 10), b = g.series(-3, 3, 10), c = g.series(-3, 3, 10);
    record(r, same((a * b) * c, a * (b * c)) && same((a + b) + c, a + (b + c)),
           a.to_string() + " | " + b.to_string() + " | " + c.to_string());
  }
  return r;
}

PropertyResult ring_commutativity(std::uint64_t seed, int cases) {
  PropertyResult r{"ring commutativity", 0, 0, {}};
  SeriesGen g(seed + 1);
  for (int i = 0; i < cases; ++i) {
    const auto a = g.series(-3, 3, 10), b = g.series(-3, 3, 10);
    record(r, same(a * b, b * a) && same(a + b, b + a), a.to_string() + " | " + b.to_string());
  }
  return r;
}

PropertyResult ring_distributivity(std::uint64_t seed, int cases) {
  PropertyResult r{"ring distributivity", 0, 0, {}};
  SeriesGen g(seed + 2);
  for (int i = 0; i < cases; ++i) {
    const auto a = g.series(-3, 3, 10), b = g.series(-3, 3, 10), c = g.series(-3, 3, 10);
    // Both sides are compared where both are justified; the right side can
    // reach further when b + c cancels.
    record(r, agree(a * (b + c), a * b + a * c), a.to_string() + " | " + b.to_string() + " | " + c.to_string());
  }
  return r;
}

PropertyResult invert_roundtrip(std::uint64_t seed, int cases) {
  PropertyResult r{"invert round-trip", 0, 0, {}};
  SeriesGen g(seed + 3);
  for (int i = 0; i < cases; ++i) {
    const auto a = g.series(-4, 4, 15);
    const auto p = a * invert(a);
    record(r, p.valuation() == 0 && p.terms() == a.terms() && agree(p, QSeries::one(a.terms())) &&
                  same(invert(invert(a)), a),
           a.to_string());
  }
  return r;
}

PropertyResult root_roundtrip(std::uint64_t seed, int cases) {
  PropertyResult r{"root round-trip", 0, 0, {}};
  SeriesGen g(seed + 4);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t m = g.uniform(1, 5);
    const auto a = g.monic(m * g.uniform(-2, 2), g.uniform(1, 12));
    const auto b = root(a, m);
    // And the other direction: the root of a power is the original unit.
    const auto c = g.monic(g.uniform(-2, 2), g.uniform(1, 12));
    record(r, same(pow_int(b, m), a) && same(root(pow_int(c, m), m), c),
           "m=" + std::to_string(m) + " " + a.to_string());
  }
  return r;
}

PropertyResult leibniz_rule(std::uint64_t seed, int cases) {
  PropertyResult r{"Leibniz rule", 0, 0, {}};
  SeriesGen g(seed + 5);
  for (int i = 0; i < cases; ++i) {
    const auto a = g.series(-3, 3, 10), b = g.series(-3, 3, 10);
    record(r, agree(derivative_D(a * b), derivative_D(a) * b + a * derivative_D(b)),
           a.to_string() + " | " + b.to_string());
  }
  return r;
}

PropertyResult product_expand_inverse(std::uint64_t seed, int cases) {
  PropertyResult r{"product_expand(e) * product_expand(-e) = 1", 0, 0, {}};
  SeriesGen g(seed + 6);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t prec = g.uniform(1, 25);
    std::vector<std::int64_t> e(static_cast<std::size_t>(prec) + 1);
    for (auto& x : e) x = g.uniform(-30, 30);
    const auto fwd = product_expand([&](std::int64_t n) { return e[static_cast<std::size_t>(n)]; }, prec);
    const auto back = product_expand([&](std::int64_t n) { return -e[static_cast<std::size_t>(n)]; }, prec);
    const auto p = fwd * back;
    record(r, p.reach() == prec && agree(p, QSeries::one(prec)), "prec=" + std::to_string(prec));
  }
  return r;
}

PropertyResult neg_power_oracle(std::uint64_t seed, int cases) {
  PropertyResult r{"neg_power_Einf4 = pow_int(Einf4, -s)", 0, 0, {}};
  SeriesGen g(seed + 7);
  const auto e = forms::einf4(61);
  for (int i = 0; i < cases; ++i) {
    const std::int64_t s = g.uniform(1, 8), p = g.uniform(1, 60);
    const auto fast = neg_power_Einf4(s, p);
    const auto slow = pow_int(e.truncated_terms(p), -s);
    record(r, same(fast, slow), "s=" + std::to_string(s) + " p=" + std::to_string(p));
  }
  return r;
}

PropertyResult r_sign_alternation() {
  PropertyResult r{"sign R(n) = (-1)^n", 0, 0, {}};
  for (std::int64_t s = 1; s <= 64; ++s) {
    const auto R = neg_power_Einf4(s, 201);
    for (std::int64_t n = 0; n <= 200; ++n) {
      const int expected = n % 2 == 0 ? 1 : -1;
      record(r, sgn(R.coeff(n - s)) == expected, "s=" + std::to_string(s) + " n=" + std::to_string(n));
    }
  }
  return r;
}

std::vector<PropertyResult> all_properties(std::uint64_t seed, int cases) {
  return {ring_associativity(seed, cases),  ring_commutativity(seed, cases),     ring_distributivity(seed, cases),
          invert_roundtrip(seed, cases),    root_roundtrip(seed, cases),         leibniz_rule(seed, cases),
          product_expand_inverse(seed, cases), neg_power_oracle(seed, cases), r_sign_alternation()};
}

}  // namespace qgap::props
