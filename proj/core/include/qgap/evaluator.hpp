#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <utility>

#include "qgap/form_expr.hpp"
#include "qgap/qseries.hpp"

namespace qgap::forms {

/// Evaluates FormExpr monomials, memoizing generator powers per
/// (generator, exponent) at the longest precision requested so far.
///
/// Safe for concurrent use: readers share the memo, insertions take the
/// exclusive lock. Two workers racing on the same key may both compute it;
/// the longer result wins.
class Evaluator {
 public:
  /// g^e with `prec` justified coefficients from its valuation.
  QSeries power(const Generator& g, std::int64_t e, std::int64_t prec);

  /// The monomial with `prec` justified coefficients from its valuation.
  QSeries eval(const FormExpr& expr, std::int64_t prec);

  /// c_0 of the monomial, computing only the coefficients it depends on.
  Rational constant_term(const FormExpr& expr);

  std::size_t cached_entries() const;
  void clear();

 private:
  static QSeries compute_power(const Generator& g, std::int64_t e, std::int64_t prec);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<Generator, std::int64_t>, QSeries> memo_;
};

/// Process-wide evaluator used by the free functions below.
Evaluator& shared_evaluator();

QSeries eval_expr(const FormExpr& expr, std::int64_t prec);
Rational constant_term(const FormExpr& expr);

}  // namespace qgap::forms
