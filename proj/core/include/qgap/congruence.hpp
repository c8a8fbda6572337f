#pragma once

// Constant-term rules for meromorphic forms with a pole at infinity.
//
// With s the pole order, beta = d_2(s), gamma = d_3(s) and L the largest
// base-3 digit of s:
//   C2: ord_2(c0) = 3 beta            C3: ord_3(c0) = gamma
//   D3: c0 = (-1)^s 3^gamma mod 3^(gamma+1)
//   E3: c0 = 3^gamma mod 3^(gamma+1)
// Rule (1) (conductor one), clauses by weight w:
//   (a) w = 0 mod 4 -> C2            (b) w = 2 mod 4 -> 2^(4 beta) | c0
//   (c) w = 0 mod 3 -> D3            (d) w = 1 mod 3, L = 1 -> E3
//   (e) w = 1 mod 3, L = 2 -> 3^(gamma+1) | c0
//   (f) w = 2 mod 3 -> 3^(gamma+1) | c0
// Rule (2) (conductor two) is (a)-(b); rule (3) (conductor three) is (c)-(f).

#include <cstdint>
#include <string>
#include <vector>

#include "qgap/arith.hpp"

namespace qgap::congruence {

enum class Verdict {
  Pass,
  Fail,
  NotApplicable,
  ZeroConstantTerm,  // c0 = 0 where an exact order or residue was predicted; a failure
  Experimental,      // recorded, never asserted
};

std::string to_string(Verdict v);
/// True for Fail and ZeroConstantTerm.
bool is_failure(Verdict v);

struct ClauseVerdict {
  std::string rule_id;  // "1a", "2b", "3c", "dev2-order", ...
  Verdict verdict = Verdict::NotApplicable;
  std::string predicted;
  std::string observed;
};

/// ord_p(c - a) >= e, i.e. c = a (mod p^e) for rationals with p-integral difference.
bool congruent_mod_prime_power(const Rational& c, const Rational& a, std::int64_t p, std::int64_t e);
/// p^e divides c in the p-adic sense (ord_p(c) >= e).
bool divisible_by_prime_power(const Rational& c, std::int64_t p, std::int64_t e);

bool in_C2(std::int64_t s, const Rational& c0);
bool in_C3(std::int64_t s, const Rational& c0);
bool in_D3(std::int64_t s, const Rational& c0);
bool in_E3(std::int64_t s, const Rational& c0);

/// Clauses (a)-(f); two verdicts: one 2-adic, one 3-adic.
std::vector<ClauseVerdict> classify_conductor1(std::int64_t w, std::int64_t s, const Rational& c0);
/// Clauses (a)-(b).
std::vector<ClauseVerdict> classify_conductor2(std::int64_t w, std::int64_t s, const Rational& c0);
/// Clauses (c)-(f).
std::vector<ClauseVerdict> classify_conductor3(std::int64_t w, std::int64_t s, const Rational& c0);
/// Dispatch by conductor; anything other than 1, 2, 3 is NOT_APPLICABLE.
std::vector<ClauseVerdict> classify(std::int64_t conductor, std::int64_t w, std::int64_t s, const Rational& c0);

/// Systematic deviations of E_{N,inf,k}^{-a}:
///   dev2-order   N=2, k = 0 mod 4, k >= 8, a odd:      ord_2(c0) = 3 d_2(a) + ord_2(a+1) + k - 5
///   dev3-residue N=3, k = 0 mod 6, k >= 12, a = 1 mod 3: c0 = (-1)^(a+1) 3^d_3(a) mod 3^(d_3(a)+1)
///   dev3-order   N=3, k = 0 mod 6, k >= 12, a = 2 mod 3: ord_3(c0) = d_3(a) + ord_3(a+1); sign recorded only
///   dev3-digits  N=3, k = 2 mod 6, k >= 8, a = 1 mod 3, L(a) = 1: c0 = -3^d_3(a) mod 3^(d_3(a)+1)
/// NOT_APPLICABLE outside these windows.
ClauseVerdict deviation_rule(std::int64_t N, std::int64_t k, std::int64_t a, const Rational& c0);

/// Fold clause verdicts: any failure wins, then any pass, else NOT_APPLICABLE.
Verdict combine(const std::vector<ClauseVerdict>& clauses);

}  // namespace qgap::congruence
