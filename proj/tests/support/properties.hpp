#pragma once

// Seeded randomized checks of the series kernel, shared by the unit tests
// and the acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qgap/qseries.hpp"

namespace qgap::props {

/// Small random data for series tests.
class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// num/den with |num| <= 9, 1 <= den <= 4.
  Rational small_rational();
  Rational nonzero_rational();
  /// Valuation in [vlo, vhi], 1..max_terms coefficients, nonzero leading term.
  QSeries series(std::int64_t vlo, std::int64_t vhi, std::int64_t max_terms);
  /// Leading coefficient 1 at valuation v.
  QSeries monic(std::int64_t v, std::int64_t terms);

 private:
  std::mt19937_64 rng_;
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

PropertyResult ring_associativity(std::uint64_t seed, int cases);
PropertyResult ring_commutativity(std::uint64_t seed, int cases);
PropertyResult ring_distributivity(std::uint64_t seed, int cases);
PropertyResult invert_roundtrip(std::uint64_t seed, int cases);
PropertyResult root_roundtrip(std::uint64_t seed, int cases);
PropertyResult leibniz_rule(std::uint64_t seed, int cases);
PropertyResult product_expand_inverse(std::uint64_t seed, int cases);
/// neg_power_Einf4(s, p) = pow_int(E_inf4, -s), s <= 8, p <= 60.
PropertyResult neg_power_oracle(std::uint64_t seed, int cases);
/// sign R(n) = (-1)^n for every s <= 64, n <= 200 (exhaustive; `cases` ignored).
PropertyResult r_sign_alternation();

/// All of the above with the same seed.
std::vector<PropertyResult> all_properties(std::uint64_t seed, int cases);

}  // namespace qgap::props
