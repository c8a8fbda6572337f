#pragma once

// Exact series identities among the level-one and level-two generators.

#include <cstdint>
#include <string>
#include <vector>

#include "qgap/qseries.hpp"

namespace qgap::identities {

struct IdentityCheck {
  std::string name;
  std::int64_t terms = 0;
  /// First exponent where the two sides differ, if any.
  std::int64_t first_mismatch = 0;
  bool holds = false;
};

/// Compares both sides on `terms` coefficients:
///   G4 = E04 + 256 Einf4
///   Egamma2^2 = E04 + 64 Einf4
///   Einf4 = q prod (1-q^n)^(+8 n even, -8 n odd)
///   E04 = prod (1-q^n)^(16 n odd, 8 n even)
///   D j2 = -Egamma2 E04 / Einf4
///   m2 = E04 / Einf4
///   m2 = q^-1 prod (1-q^n)^(24 n odd)
///   1728 Delta = G4^3 - G6^2
///   j = G4^3 / Delta
std::vector<IdentityCheck> identity_checks(std::int64_t terms = 200);

/// Exact comparison of two series on the exponents below `reach`.
IdentityCheck compare_series(std::string name, const QSeries& lhs, const QSeries& rhs, std::int64_t reach);

}  // namespace qgap::identities
