#pragma once

// Verification suites shared by `qgap verify` and the acceptance tests.
// Each suite flattens its checks into lines with one verdict apiece.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgap/congruence.hpp"
#include "qgap/defaults.hpp"

namespace qgap::suites {

using congruence::Verdict;

struct CheckLine {
  std::string group;
  std::string item;
  Verdict verdict = Verdict::NotApplicable;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckLine> lines;

  /// group -> verdict name -> count
  std::map<std::string, std::map<std::string, std::int64_t>> counts() const;
  /// No FAIL and no ZERO_CONSTANT_TERM line.
  bool ok() const;
  std::int64_t count(Verdict v) const;
};

/// Series identities to `terms` coefficients.
SuiteReport identities(std::int64_t terms = 200);
/// Vanishing of c0[f T] over the level-one and level-two bases, and the
/// sign of c0[T_{2,h}] (h = 0 mod 4); c0[T_{2,h}] for h = 2 mod 4 is
/// measured and reported as EXPERIMENTAL.
SuiteReport satz(const defaults::Scale& scale);
/// Level-two gap bounds over bases and seeded random combinations.
SuiteReport gap(const defaults::Scale& scale);
/// Proven 2-adic and 3-adic constant-term congruences for Einf4^-s,
/// Delta^-s and the T-series.
SuiteReport congruences(const defaults::Scale& scale);
/// The four built-in constant-term surveys.
SuiteReport rules(const defaults::Scale& scale, int jobs = 1);
/// delta_{p,n}, reciprocal comparison and Lehner congruences.
SuiteReport coefficients(const defaults::Scale& scale);
/// Theta series of D4 and its direct sums, levels, and the minimum bound.
SuiteReport quadratic(const defaults::Scale& scale);

std::vector<std::string> suite_names();
/// Throws Error for an unknown name.
SuiteReport run(const std::string& name, const defaults::Scale& scale, int jobs = 1);

}  // namespace qgap::suites
