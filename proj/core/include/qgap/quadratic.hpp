#pragma once

// Even positive-definite quadratic forms Q_A(x) = x^T A x: validation,
// level, theta series by exact short-vector enumeration, minima and the
// level-two minimum bound.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgap/arith.hpp"
#include "qgap/congruence.hpp"

namespace qgap::quadratic {

using Matrix = std::vector<std::vector<std::int64_t>>;

class GramMatrix {
 public:
  /// Throws DomainError naming the violated condition: non-square,
  /// asymmetric, odd diagonal entry, or a non-positive leading minor.
  static GramMatrix validate(Matrix entries);

  std::int64_t rank() const noexcept { return static_cast<std::int64_t>(entries_.size()); }
  std::int64_t entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
  const Matrix& entries() const noexcept { return entries_; }
  Integer determinant() const;
  /// Exact A^{-1}.
  std::vector<std::vector<Rational>> inverse() const;
  /// Least N with N A^{-1} integral and even on the diagonal.
  std::int64_t level() const;
  /// Q_A(x).
  Integer evaluate(const std::vector<std::int64_t>& x) const;

 private:
  explicit GramMatrix(Matrix entries) : entries_(std::move(entries)) {}
  Matrix entries_;
};

/// Entry n counts x in Z^v with Q_A(x) = 2n, n = 0 .. n_max.
using ThetaSeries = std::vector<Integer>;

ThetaSeries theta(const GramMatrix& A, std::int64_t n_max);
/// Smallest positive value 2n taken by Q_A.
std::int64_t min_represented(const GramMatrix& A);

struct MinimumBoundResult {
  std::int64_t rank = 0;
  std::int64_t level = 0;
  std::int64_t minimum = 0;
  std::int64_t bound = 0;
  congruence::Verdict verdict = congruence::Verdict::Fail;
  /// v = 4 mod 8: whether minimum <= 3 + v/4 (recorded, never asserted).
  std::optional<bool> within_sharper_bound;
};

/// Requires level <= 2 and 4 | v. Bound 2 + v/4 when 8 | v, else 2 + v/2.
MinimumBoundResult verify_minimum_bound(const GramMatrix& A);

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);
GramMatrix scaled(const GramMatrix& a, std::int64_t factor);
GramMatrix d4();
GramMatrix e8();

/// Text format: first line v, then v rows of v integers; '#' starts a
/// comment. Errors carry the 1-based line number.
GramMatrix parse_gram(std::istream& in);
GramMatrix load_gram(const std::string& path);

}  // namespace qgap::quadratic
