#pragma once

// Batch classification of instantiated form families.
//
// Config (JSON):
//   {"name": "rules1",
//    "families": [
//      {"name": "Delta^-a", "template": "Delta^-a",
//       "ranges": {"a": [1, 64]},            // [lo, hi] or [lo, hi, step]
//       "filters": ["a odd", "a mod 3 = 1,2", "L(a) = 1"],
//       "rule": "auto"}                       // auto | 1 | 2 | 3 | deviation | none
//    ]}

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qgap/congruence.hpp"
#include "qgap/form_expr.hpp"

namespace qgap::survey {

enum class RuleChoice { Auto, Conductor1, Conductor2, Conductor3, Deviation, None };

struct Range {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  std::int64_t step = 1;
};

/// One parsed filter clause.
struct Filter {
  enum class Kind { Odd, Even, Mod, LargestDigit };
  Kind kind = Kind::Odd;
  std::string variable;
  std::int64_t modulus = 0;             // Mod
  std::vector<std::int64_t> residues;   // Mod, or the digit value for LargestDigit
  std::string text;

  /// "a odd", "a even", "a mod M = r1,r2", "L(a) = d".
  static Filter parse(const std::string& text);
  bool accepts(const forms::Bindings& env) const;
};

struct FamilySpec {
  std::string name;
  std::string template_text;
  std::map<std::string, Range> ranges;
  std::vector<Filter> filters;
  RuleChoice rule = RuleChoice::Auto;

  /// Every parameter binding that passes the filters, in lexicographic order.
  std::vector<forms::Bindings> instances() const;
};

struct SurveyConfig {
  std::string name;
  std::vector<FamilySpec> families;
  /// The config as compact JSON text.
  std::string echo;

  /// Throws Error naming the family on malformed entries or templates.
  static SurveyConfig from_json_text(const std::string& text);
  /// As from_json_text; a missing file throws Error.
  static SurveyConfig load(const std::string& path);
};

struct SurveyRecord {
  std::string family;
  std::string template_text;
  std::string expr;
  forms::Bindings params;
  std::int64_t conductor = 1;
  std::int64_t weight = 0;
  std::int64_t pole_order = 0;
  Rational c0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t largest_digit3 = 0;
  POrder ord2 = POrder::infinite();
  POrder ord3 = POrder::infinite();
  std::vector<congruence::ClauseVerdict> clauses;
  std::string rule_id;
  congruence::Verdict verdict = congruence::Verdict::NotApplicable;

  /// One-line JSON object.
  std::string to_json() const;
};

struct SurveyReport {
  std::string config_name;
  std::vector<SurveyRecord> records;
  /// rule id -> verdict name -> count
  std::map<std::string, std::map<std::string, std::int64_t>> by_rule;
  std::map<std::string, std::int64_t> by_verdict;
  std::string config_echo;
  std::string timestamp;

  bool ok() const;
  /// One-line JSON object with counts, config echo and timestamp.
  std::string summary_json() const;
  /// One JSON object per record, then the summary object.
  void write_json_lines(std::ostream& out) const;
  void write_table(std::ostream& out) const;
};

/// Classify one monomial under the given rule choice.
SurveyRecord classify_expr(const forms::FormExpr& expr, RuleChoice rule);

/// jobs <= 0 means one worker per hardware thread. The report does not
/// depend on the number of workers (apart from the timestamp).
SurveyReport run_survey(const SurveyConfig& config, int jobs = 1);

std::string to_string(RuleChoice r);

}  // namespace qgap::survey
