#pragma once

// Coefficientwise p-adic comparisons between j and 1/Delta, and between 1/j
// and Delta (n != 0), plus Lehner's congruences for the coefficients of j.

#include <cstdint>
#include <optional>
#include <vector>

#include "qgap/congruence.hpp"
#include "qgap/qseries.hpp"

namespace qgap::coefficients {

/// Observed relations were checked for n up to these bounds; beyond them a
/// row is EXPERIMENTAL rather than asserted.
inline constexpr std::int64_t kDeltaVerifiedMax = 2470;
inline constexpr std::int64_t kReciprocalVerifiedMax = 4096;
inline constexpr std::int64_t kReciprocalP5VerifiedMax = 1225;
/// The one recorded exception to delta_{5,n} = ord_5(n).
inline constexpr std::int64_t kDeltaP5Exception = 2245;
inline constexpr std::int64_t kDeltaP5ExceptionValue = 2;

/// j, 1/Delta (from q^-1) and Delta, 1/j (from q^1), all known through q^n_max.
struct CoefficientData {
  std::int64_t n_max = 0;
  QSeries j;
  QSeries inv_delta;
  QSeries delta;
  QSeries inv_j;

  static CoefficientData compute(std::int64_t n_max);
};

struct DeltaRow {
  std::int64_t n = 0;
  POrder ord_j = POrder::infinite();
  POrder ord_inv_delta = POrder::infinite();
  /// ord_j - ord_inv_delta; empty when either coefficient is zero.
  std::optional<std::int64_t> delta;
  std::optional<std::int64_t> predicted;
  congruence::Verdict verdict = congruence::Verdict::NotApplicable;
};

/// delta_{p,n} = ord_p(c_n[j]) - ord_p(c_n[1/Delta]) for n = -1 and
/// 1 <= n <= n_max, p in {2, 3, 5}, with the predicted value where one exists:
///   p = 2, n even:       3 ord_2(n) + 1
///   p = 3, 3 | n:        2 ord_3(n)
///   p = 3, n = 1 mod 3:  -1
///   p = 5, 5 | n:        ord_5(n), except 2 at n = 2245
/// Rows stop at `limit` when it is given (at most data.n_max).
std::vector<DeltaRow> delta_pn_compare(const CoefficientData& data, std::int64_t p,
                                       std::optional<std::int64_t> limit = std::nullopt);
std::vector<DeltaRow> delta_pn_compare(std::int64_t p, std::int64_t n_max);

struct ReciprocalRow {
  std::int64_t n = 0;
  std::int64_t p = 0;
  POrder ord_inv_j = POrder::infinite();
  POrder ord_delta = POrder::infinite();
  congruence::Verdict verdict = congruence::Verdict::NotApplicable;
};

/// ord_p(c_n[1/j]) vs ord_p(c_n[Delta]) = ord_p(tau(n)) for p in {2, 3, 5};
/// p = 5 is skipped for n = 3, 4 mod 5.
std::vector<ReciprocalRow> reciprocal_compare(const CoefficientData& data,
                                              std::optional<std::int64_t> limit = std::nullopt);
std::vector<ReciprocalRow> reciprocal_compare(std::int64_t n_max);

struct LehnerRow {
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t alpha = 0;
  std::int64_t required = 0;
  POrder observed = POrder::infinite();
  congruence::Verdict verdict = congruence::Verdict::NotApplicable;
};

/// c(p^alpha n) = 0 mod 2^(3 alpha + 8), 3^(2 alpha + 3), 5^(alpha + 1), 7^alpha
/// for every argument m = p^alpha n <= n_max with alpha >= 1.
std::vector<LehnerRow> lehner_check(const CoefficientData& data, std::optional<std::int64_t> limit = std::nullopt);
std::vector<LehnerRow> lehner_check(std::int64_t n_max);

}  // namespace qgap::coefficients
