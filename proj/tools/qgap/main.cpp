// qgap: command-line frontend.
//
// Exit status: 0 when every assertable verdict passed, 1 when one failed,
// 2 on invalid input (bad flags, parse errors, unreadable files).

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgap/catalog.hpp"
#include "qgap/error.hpp"
#include "qgap/evaluator.hpp"
#include "qgap/quadratic.hpp"
#include "qgap/siegel.hpp"
#include "qgap/suites.hpp"
#include "qgap/survey.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qgap;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

// Thrown for input problems detected by the frontend itself.
struct UsageError : Error {
  using Error::Error;
};

const std::map<std::string, survey::RuleChoice> kRules{
    {"auto", survey::RuleChoice::Auto},          {"1", survey::RuleChoice::Conductor1},
    {"2", survey::RuleChoice::Conductor2},       {"3", survey::RuleChoice::Conductor3},
    {"deviation", survey::RuleChoice::Deviation}, {"none", survey::RuleChoice::None}};

int default_jobs() {
  if (const char* env = std::getenv("QGAP_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("QGAP_JOBS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

int run_expand(const std::string& text, std::int64_t prec, bool json) {
  const auto expr = forms::FormExpr::parse(text);
  // List from the symbolic valuation even if the leading coefficient cancels.
  const QSeries s = forms::eval_expr(expr, prec);
  const std::int64_t v = expr.valuation();
  std::vector<Rational> coeffs;
  for (std::int64_t n = v; n < v + prec; ++n) coeffs.push_back(n < s.valuation() ? Rational(0) : s.coeff(n));
  if (json) {
    ordered_json j;
    j["expr"] = expr.to_string();
    j["valuation"] = v;
    j["coefficients"] = ordered_json::array();
    for (const auto& c : coeffs) j["coefficients"].push_back(to_string(c));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "val " << v << ": [";
    for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? ", " : "") << to_string(coeffs[i]);
    std::cout << "]\n";
  }
  return kOk;
}

int run_c0(const std::string& text, survey::RuleChoice rule, bool json) {
  const auto rec = survey::classify_expr(forms::FormExpr::parse(text), rule);
  if (json) {
    std::cout << rec.to_json() << '\n';
  } else {
    std::cout << "expr       " << rec.expr << '\n'
              << "conductor  " << rec.conductor << '\n'
              << "weight     " << rec.weight << '\n'
              << "pole order " << rec.pole_order << '\n'
              << "c0         " << to_string(rec.c0) << '\n'
              << "ord2 ord3  " << rec.ord2.to_string() << ' ' << rec.ord3.to_string() << '\n';
    for (const auto& c : rec.clauses)
      std::cout << "  " << c.rule_id << "  " << congruence::to_string(c.verdict) << "  predicted " << c.predicted
                << "; observed " << c.observed << '\n';
    std::cout << "verdict    " << congruence::to_string(rec.verdict) << '\n';
  }
  return congruence::is_failure(rec.verdict) ? kFailed : kOk;
}

int run_survey_cmd(const std::string& path, const std::string& builtin, bool full, bool json, int jobs) {
  if (path.empty() == builtin.empty()) throw UsageError("survey needs exactly one of CONFIG or --builtin NAME");
  const auto config = builtin.empty() ? survey::SurveyConfig::load(path) : survey::builtin_survey(builtin, full);
  const auto report = survey::run_survey(config, jobs);
  if (json)
    report.write_json_lines(std::cout);
  else
    report.write_table(std::cout);
  return report.ok() ? kOk : kFailed;
}

int run_gap(std::int64_t level, std::int64_t h_min, std::int64_t h_max, int random, std::uint64_t seed, bool json) {
  if (level != 2) throw UsageError("gap bounds are implemented for level 2 only");
  if (h_min < 2 || h_max < h_min) throw UsageError("need 2 <= hmin <= hmax");
  if (random < 0) throw UsageError("--random must be >= 0");
  const auto results = siegel::gap_suite(h_min, h_max, random, seed);
  bool ok = true;
  for (const auto& g : results) {
    ok = ok && !congruence::is_failure(g.verdict);
    if (json) {
      ordered_json j;
      j["h"] = g.h;
      j["r"] = g.r;
      j["bound"] = g.bound;
      j["form"] = g.form_id;
      j["first_nonzero_index"] = g.first_nonzero_index;
      j["verdict"] = congruence::to_string(g.verdict);
      if (g.within_sharper_bound) j["within_sharper_bound"] = *g.within_sharper_bound;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "h=" << g.h << " r=" << g.r << " bound=" << g.bound << " first=" << g.first_nonzero_index << ' '
                << congruence::to_string(g.verdict) << "  " << g.form_id;
      if (g.within_sharper_bound) std::cout << (*g.within_sharper_bound ? "  (<= r+1)" : "  (> r+1)");
      std::cout << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

quadratic::GramMatrix load_checked(const std::string& path, std::int64_t max_rank) {
  auto A = quadratic::load_gram(path);
  if (A.rank() > max_rank)
    throw UsageError("rank " + std::to_string(A.rank()) + " exceeds --max-rank " + std::to_string(max_rank));
  return A;
}

int run_theta(const std::string& path, std::int64_t terms, std::int64_t max_terms, std::int64_t max_rank, bool json) {
  if (terms < 1) throw UsageError("--terms must be >= 1");
  if (terms > max_terms)
    throw UsageError("--terms " + std::to_string(terms) + " exceeds --max-terms " + std::to_string(max_terms));
  const auto A = load_checked(path, max_rank);
  const auto t = quadratic::theta(A, terms - 1);
  if (json) {
    ordered_json j;
    j["rank"] = A.rank();
    j["level"] = A.level();
    j["theta"] = ordered_json::array();
    for (const auto& c : t) j["theta"].push_back(to_string(c));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "rank=" << A.rank() << " level=" << A.level() << '\n' << "theta: [";
    for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? ", " : "") << to_string(t[i]);
    std::cout << "]\n";
  }
  return kOk;
}

int run_minima(const std::string& path, std::int64_t max_rank, bool json) {
  const auto A = load_checked(path, max_rank);
  const auto r = quadratic::verify_minimum_bound(A);
  if (json) {
    ordered_json j;
    j["rank"] = r.rank;
    j["level"] = r.level;
    j["min"] = r.minimum;
    j["bound"] = r.bound;
    j["verdict"] = congruence::to_string(r.verdict);
    if (r.within_sharper_bound) j["within_sharper_bound"] = *r.within_sharper_bound;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "min=" << r.minimum << " bound=" << r.bound << ' ' << congruence::to_string(r.verdict) << '\n';
  }
  return congruence::is_failure(r.verdict) ? kFailed : kOk;
}

void print_suite(const suites::SuiteReport& rep, bool verbose, bool json) {
  if (json) {
    for (const auto& l : rep.lines) {
      ordered_json j;
      j["suite"] = rep.name;
      j["group"] = l.group;
      j["item"] = l.item;
      j["verdict"] = congruence::to_string(l.verdict);
      j["detail"] = l.detail;
      std::cout << j.dump() << '\n';
    }
    ordered_json s;
    s["suite"] = rep.name;
    s["summary"] = rep.counts();
    s["ok"] = rep.ok();
    std::cout << s.dump() << '\n';
    return;
  }
  std::cout << "== " << rep.name << '\n';
  for (const auto& l : rep.lines) {
    // Failures and conjectural counterexamples are always shown.
    const bool counterexample = l.verdict == congruence::Verdict::Experimental &&
                                (l.detail.rfind("ZERO", 0) == 0 || l.detail.rfind("EXCEEDS", 0) == 0);
    if (verbose || congruence::is_failure(l.verdict) || counterexample)
      std::cout << "  " << congruence::to_string(l.verdict) << "  [" << l.group << "] " << l.item << "  " << l.detail
                << '\n';
  }
  for (const auto& [group, counts] : rep.counts()) {
    std::cout << "  " << group << ':';
    for (const auto& [v, n] : counts) std::cout << ' ' << n << ' ' << v;
    std::cout << '\n';
  }
  std::cout << rep.name << ": " << (rep.ok() ? "PASS" : "FAIL") << '\n';
}

int run_verify(const std::vector<std::string>& names, bool full, bool verbose, bool json, int jobs) {
  const auto scale = defaults::scale(full);
  std::vector<std::string> todo = names;
  if (todo.empty() || (todo.size() == 1 && todo[0] == "all")) todo = suites::suite_names();
  bool ok = true;
  for (const auto& name : todo) {
    if (full && name == "coefficients")
      std::cerr << "warning: full-range coefficient comparisons expand j, 1/j, Delta and 1/Delta through q^"
                << scale.reciprocal_n_max << " (tens of seconds rather than well under one)\n";
    const auto rep = suites::run(name, scale, jobs);
    print_suite(rep, verbose, json);
    ok = ok && rep.ok();
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-expansions, constant-term congruences and gap bounds for modular forms of level 1-3"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON-lines output")->capture_default_str();

  std::string expr;
  std::int64_t prec = 10;
  auto* expand = app.add_subcommand("expand", "Print the q-expansion of a monomial");
  expand->add_option("EXPR", expr, "e.g. \"Delta^-1\", \"G(4)^2 * Einf4^-1\"")->required();
  expand->add_option("--prec", prec, "Number of coefficients from the valuation")->capture_default_str();

  std::string rule_name = "auto";
  auto* c0 = app.add_subcommand("c0", "Constant term and congruence verdict of a monomial");
  c0->add_option("EXPR", expr)->required();
  c0->add_option("--rule", rule_name, "auto | 1 | 2 | 3 | deviation | none")
      ->check(CLI::IsMember({"auto", "1", "2", "3", "deviation", "none"}))
      ->capture_default_str();

  std::string config_path, builtin;
  bool full = false;
  int jobs = 0;
  auto* survey_cmd = app.add_subcommand("survey", "Run a constant-term survey");
  survey_cmd->add_option("CONFIG", config_path, "Survey config (JSON)");
  survey_cmd->add_option("--builtin", builtin, "Built-in survey")
      ->check(CLI::IsMember(survey::builtin_survey_names()));
  survey_cmd->add_flag("--full", full, "Full ranges instead of desk scale");
  survey_cmd->add_option("--jobs", jobs, "Worker threads (default: QGAP_JOBS or 1)")->check(CLI::PositiveNumber);

  std::int64_t level = 2, h_min = 2, h_max = 40;
  int random = 20;
  std::uint64_t seed = defaults::desk().gap_seed;
  auto* gap = app.add_subcommand("gap", "Check the level-two gap bound");
  gap->add_option("--level", level)->capture_default_str();
  gap->add_option("--hmin", h_min)->capture_default_str();
  gap->add_option("--hmax", h_max)->capture_default_str();
  gap->add_option("--random", random, "Random combinations per weight")->capture_default_str();
  gap->add_option("--seed", seed)->capture_default_str();

  std::string gram_path;
  std::int64_t terms = 10, max_terms = defaults::desk().theta_terms, max_rank = defaults::desk().rank_cap;
  auto* theta = app.add_subcommand("theta", "Theta series of a Gram matrix");
  theta->add_option("GRAM", gram_path)->required();
  theta->add_option("--terms", terms, "Coefficients q^0 .. q^(terms-1)")->capture_default_str();
  theta->add_option("--max-terms", max_terms)->capture_default_str();
  theta->add_option("--max-rank", max_rank)->capture_default_str();

  auto* minima = app.add_subcommand("minima", "Check the minimum bound for an even lattice of level <= 2");
  minima->add_option("GRAM", gram_path)->required();
  minima->add_option("--max-rank", max_rank)->capture_default_str();

  std::vector<std::string> suite_list;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto names = suites::suite_names();
  names.push_back("all");
  // Older suite names, still accepted.
  const std::map<std::string, std::string> aliases{{"theorems4", "congruences"}, {"sec33", "coefficients"}};
  verify->add_option("--suite", suite_list, "Suite name (repeatable; default all)")
      ->transform(CLI::Transformer(aliases))
      ->check(CLI::IsMember(names));
  verify->add_flag("--full", full, "Full ranges instead of desk scale");
  verify->add_flag("--verbose", verbose, "Print every check");
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (jobs == 0) jobs = default_jobs();
    if (*expand) {
      if (prec < 1) throw UsageError("--prec must be >= 1");
      return run_expand(expr, prec, json);
    }
    if (*c0) return run_c0(expr, kRules.at(rule_name), json);
    if (*survey_cmd) return run_survey_cmd(config_path, builtin, full, json, jobs);
    if (*gap) return run_gap(level, h_min, h_max, random, seed, json);
    if (*theta) return run_theta(gram_path, terms, max_terms, max_rank, json);
    if (*minima) return run_minima(gram_path, max_rank, json);
    if (*verify) return run_verify(suite_list, full, verbose, json, jobs);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ReachError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
