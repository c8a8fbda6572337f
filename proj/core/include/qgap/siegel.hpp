#pragma once

// Numerical verification of the vanishing/nonvanishing statements for the
// T-series at levels one and two, the level-two gap bound, and the
// constant-term congruences for E_inf4^-s, Delta^-s and the T-series.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgap/congruence.hpp"
#include "qgap/qseries.hpp"

namespace qgap::siegel {

using congruence::Verdict;

struct SatzResult {
  std::int64_t level = 1;
  std::int64_t h = 0;
  std::string form_id;
  Rational c0;
  Verdict verdict = Verdict::Fail;
};

/// c0[T f] for f in M(level, h): PASS iff it vanishes. f must be holomorphic
/// at infinity and known through q^(pole order of T).
SatzResult satz1_check(std::int64_t level, std::int64_t h, const QSeries& f, std::string form_id = "f");

/// satz1_check over the standard basis of M(level, h) for every even h in
/// [h_min, h_max] where T is defined (h >= 4 at level one, h >= 2 at level two).
std::vector<SatzResult> satz_suite(std::int64_t level, std::int64_t h_min, std::int64_t h_max);

struct T2ConstantTerm {
  std::int64_t h = 0;
  std::int64_t r = 0;
  Rational c0;
  int expected_sign = 0;
  Verdict verdict = Verdict::Fail;
};

/// c0[T_{2,h}] for h = 0 mod 4, h >= 4: PASS iff nonzero with sign (-1)^(r+1), r = r(2,h).
T2ConstantTerm constant_term_T2(std::int64_t h);

struct NamedForm {
  std::string id;
  QSeries series;
};

struct GapCheckResult {
  std::int64_t h = 0;
  std::int64_t r = 0;
  /// r for h = 0 mod 4, 2r for h = 2 mod 4.
  std::int64_t bound = 0;
  std::string form_id;
  /// Least n >= 1 with A_n != 0; the reach of the form if none was found.
  std::int64_t first_nonzero_index = 0;
  Verdict verdict = Verdict::Fail;
  /// h = 2 mod 4 only: whether the index is <= r + 1 (recorded, never asserted).
  std::optional<bool> within_sharper_bound;
};

/// Gap bound for forms of M(2, h) with nonzero constant term, each known
/// through q^bound.
std::vector<GapCheckResult> gap_check(std::int64_t h, const std::vector<NamedForm>& forms);

/// Basis elements of M(2, h) with nonzero constant term, followed by
/// `random_count` combinations of the whole basis with small integer
/// coefficients (seeded), each with a nonzero constant term.
std::vector<NamedForm> gap_forms(std::int64_t h, int random_count, std::uint64_t seed);

std::vector<GapCheckResult> gap_suite(std::int64_t h_min, std::int64_t h_max, int random_count,
                                      std::uint64_t seed);

inline constexpr const char* kOrderEinf4 = "Einf4^-s order";
inline constexpr const char* kOrderDelta = "Delta^-s order";
inline constexpr const char* kResidueT = "T-series residue";

struct CongruenceCheck {
  std::string family;    // kOrderEinf4, kOrderDelta or kResidueT
  std::string instance;  // e.g. "Einf4^-8", "T(20)"
  std::string predicted;
  std::string observed;
  Verdict verdict = Verdict::Fail;
};

struct CongruenceOptions {
  std::int64_t einf4_s_max = 64;
  std::int64_t delta_s_max = 80;
  std::int64_t t_h_max = 200;
};

/// Proven 2-adic statements about constant terms:
///   ord_2 c0[Einf4^-s] = 3 for s = 2^x;
///   ord_2 c0[Delta^-s] = 3 d_2(s) for s = 2^x D, D in {1, 3, 5};
///   c0[T_h] = 16 or 8 (mod 32) for h = 8 or 2 (mod 12) with r(1,h) = 2^x, x >= 1;
///   c0[T_{2,h}] = 8 (mod 16) for h = 2^x - 6 and 16 (mod 32) for h = 2^x - 4.
std::vector<CongruenceCheck> constant_term_congruences(const CongruenceOptions& options = {});

}  // namespace qgap::siegel
