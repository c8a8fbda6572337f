#include "qgap/coefficients.hpp"

#include "qgap/error.hpp"
#include "qgap/forms.hpp"

namespace qgap::coefficients {

using congruence::Verdict;

namespace {

void require_n_max(std::int64_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1, got " + std::to_string(n_max));
}

std::int64_t row_limit(const CoefficientData& data, std::optional<std::int64_t> limit) {
  if (!limit) return data.n_max;
  if (*limit > data.n_max)
    throw ReachError("coefficients are known through n = " + std::to_string(data.n_max) + ", asked for " +
                     std::to_string(*limit));
  return *limit;
}

Verdict compare(bool equal, bool asserted) {
  if (!asserted) return Verdict::Experimental;
  return equal ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

CoefficientData CoefficientData::compute(std::int64_t n_max) {
  require_n_max(n_max);
  CoefficientData d;
  d.n_max = n_max;
  // Exponents -1 .. n_max: n_max + 2 terms.
  d.j = forms::j_invariant(n_max + 2);
  d.inv_delta = invert(forms::delta(n_max + 2));
  // Exponents 1 .. n_max.
  d.delta = forms::delta(n_max);
  d.inv_j = invert(forms::j_invariant(n_max));
  return d;
}

std::vector<DeltaRow> delta_pn_compare(const CoefficientData& data, std::int64_t p,
                                       std::optional<std::int64_t> limit) {
  const std::int64_t n_max = row_limit(data, limit);
  if (p != 2 && p != 3 && p != 5) throw DomainError("delta_pn_compare: p must be 2, 3 or 5");
  std::vector<DeltaRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = -1; n <= n_max; ++n) {
    if (n == 0) continue;
    DeltaRow row;
    row.n = n;
    row.ord_j = ord_p(data.j.coeff(n), p);
    row.ord_inv_delta = ord_p(data.inv_delta.coeff(n), p);
    if (!row.ord_j.is_infinite() && !row.ord_inv_delta.is_infinite())
      row.delta = row.ord_j.value() - row.ord_inv_delta.value();
    if (n > 0) {
      if (p == 2 && n % 2 == 0) row.predicted = 3 * ord_p(n, 2) + 1;
      if (p == 3 && n % 3 == 0) row.predicted = 2 * ord_p(n, 3);
      if (p == 3 && n % 3 == 1) row.predicted = -1;
      if (p == 5 && n % 5 == 0) row.predicted = n == kDeltaP5Exception ? kDeltaP5ExceptionValue : ord_p(n, 5);
    }
    if (row.predicted)
      row.verdict = compare(row.delta == row.predicted, n <= kDeltaVerifiedMax);
    rows.push_back(row);
  }
  return rows;
}

std::vector<DeltaRow> delta_pn_compare(std::int64_t p, std::int64_t n_max) {
  return delta_pn_compare(CoefficientData::compute(n_max), p);
}

std::vector<ReciprocalRow> reciprocal_compare(const CoefficientData& data, std::optional<std::int64_t> limit) {
  const std::int64_t n_max = row_limit(data, limit);
  std::vector<ReciprocalRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t p : {2, 3, 5}) {
      if (p == 5 && (n % 5 == 3 || n % 5 == 4)) continue;
      ReciprocalRow row;
      row.n = n;
      row.p = p;
      row.ord_inv_j = ord_p(data.inv_j.coeff(n), p);
      row.ord_delta = ord_p(data.delta.coeff(n), p);
      const std::int64_t verified = p == 5 ? kReciprocalP5VerifiedMax : kReciprocalVerifiedMax;
      row.verdict = compare(row.ord_inv_j == row.ord_delta, n <= verified);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ReciprocalRow> reciprocal_compare(std::int64_t n_max) {
  return reciprocal_compare(CoefficientData::compute(n_max));
}

std::vector<LehnerRow> lehner_check(const CoefficientData& data, std::optional<std::int64_t> limit) {
  const std::int64_t n_max = row_limit(data, limit);
  std::vector<LehnerRow> rows;
  for (std::int64_t m = 1; m <= n_max; ++m) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      const std::int64_t alpha = ord_p(m, p);
      if (alpha == 0) continue;
      LehnerRow row;
      row.m = m;
      row.p = p;
      row.alpha = alpha;
      switch (p) {
        case 2: row.required = 3 * alpha + 8; break;
        case 3: row.required = 2 * alpha + 3; break;
        case 5: row.required = alpha + 1; break;
        default: row.required = alpha; break;
      }
      row.observed = ord_p(data.j.coeff(m), p);
      row.verdict = row.observed >= POrder::finite(row.required) ? Verdict::Pass : Verdict::Fail;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<LehnerRow> lehner_check(std::int64_t n_max) {
  return lehner_check(CoefficientData::compute(n_max));
}

}  // namespace qgap::coefficients
