#include "qgap/survey.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qgap/error.hpp"
#include "qgap/evaluator.hpp"

namespace qgap::survey {

using congruence::Verdict;
using forms::Bindings;
using forms::FormExpr;
using forms::FormTemplate;
using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

json order_json(const POrder& o) {
  if (o.is_infinite()) return "INF";
  return o.value();
}

RuleChoice parse_rule(const json& j) {
  const std::string text = j.is_string() ? j.get<std::string>() : j.dump();
  if (text == "auto") return RuleChoice::Auto;
  if (text == "1") return RuleChoice::Conductor1;
  if (text == "2") return RuleChoice::Conductor2;
  if (text == "3") return RuleChoice::Conductor3;
  if (text == "deviation") return RuleChoice::Deviation;
  if (text == "none") return RuleChoice::None;
  throw Error("unknown rule '" + text + "' (expected auto, 1, 2, 3, deviation or none)");
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string abbreviate(const std::string& s, std::size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, 10) + "...(" + std::to_string(s.size()) + " chars)";
}

struct Task {
  std::size_t family = 0;
  Bindings params;
  FormExpr expr;
};

}  // namespace

std::string to_string(RuleChoice r) {
  switch (r) {
    case RuleChoice::Auto: return "auto";
    case RuleChoice::Conductor1: return "1";
    case RuleChoice::Conductor2: return "2";
    case RuleChoice::Conductor3: return "3";
    case RuleChoice::Deviation: return "deviation";
    case RuleChoice::None: return "none";
  }
  return "?";
}

Filter Filter::parse(const std::string& text) {
  static const std::regex parity(R"(^\s*([A-Za-z_]\w*)\s+(odd|even)\s*$)");
  static const std::regex mod(R"(^\s*([A-Za-z_]\w*)\s+mod\s+(\d+)\s*=\s*(\d+(?:\s*,\s*\d+)*)\s*$)");
  static const std::regex digit(R"(^\s*L\(\s*([A-Za-z_]\w*)\s*\)\s*=\s*(\d+)\s*$)");
  Filter f;
  f.text = text;
  std::smatch m;
  if (std::regex_match(text, m, parity)) {
    f.variable = m[1];
    f.kind = m[2] == "odd" ? Kind::Odd : Kind::Even;
  } else if (std::regex_match(text, m, mod)) {
    f.kind = Kind::Mod;
    f.variable = m[1];
    f.modulus = std::stoll(m[2]);
    if (f.modulus <= 0) throw Error("filter '" + text + "': modulus must be positive");
    std::string list = m[3];
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream in(list);
    for (std::int64_t r; in >> r;) f.residues.push_back(r);
  } else if (std::regex_match(text, m, digit)) {
    f.kind = Kind::LargestDigit;
    f.variable = m[1];
    f.residues.push_back(std::stoll(m[2]));
  } else {
    throw Error("filter '" + text + "': expected 'x odd', 'x even', 'x mod M = r,...' or 'L(x) = d'");
  }
  return f;
}

bool Filter::accepts(const Bindings& env) const {
  const auto it = env.find(variable);
  if (it == env.end()) throw Error("filter '" + text + "': unbound variable " + variable);
  const std::int64_t v = it->second;
  switch (kind) {
    case Kind::Odd: return floor_mod(v, 2) == 1;
    case Kind::Even: return floor_mod(v, 2) == 0;
    case Kind::Mod:
      return std::find(residues.begin(), residues.end(), floor_mod(v, modulus)) != residues.end();
    case Kind::LargestDigit: return v > 0 && largest_digit(v, 3) == residues.front();
  }
  return false;
}

std::vector<Bindings> FamilySpec::instances() const {
  std::vector<Bindings> out;
  Bindings env;
  std::vector<std::pair<std::string, Range>> dims(ranges.begin(), ranges.end());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == dims.size()) {
      if (std::all_of(filters.begin(), filters.end(), [&](const Filter& f) { return f.accepts(env); }))
        out.push_back(env);
      return;
    }
    const auto& [name, r] = dims[i];
    for (std::int64_t v = r.lo; v <= r.hi; v += r.step) {
      env[name] = v;
      self(self, i + 1);
    }
    env.erase(name);
  };
  rec(rec, 0);
  return out;
}

SurveyConfig SurveyConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed survey config: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw Error("survey config must be a JSON object");
  SurveyConfig config;
  config.name = j.value("name", std::string("survey"));
  config.echo = j.dump();
  if (!j.contains("families")) return config;
  if (!j["families"].is_array()) throw Error("survey config: 'families' must be an array");
  for (const auto& fj : j["families"]) {
    FamilySpec f;
    f.template_text = fj.value("template", std::string());
    f.name = fj.value("name", f.template_text);
    const std::string where = "family '" + f.name + "'";
    if (f.template_text.empty()) throw Error(where + ": missing 'template'");
    try {
      FormTemplate tmpl = FormTemplate::parse(f.template_text);
      if (fj.contains("ranges")) {
        for (const auto& [var, rj] : fj["ranges"].items()) {
          if (!rj.is_array() || rj.size() < 2 || rj.size() > 3)
            throw Error("range for '" + var + "' must be [lo, hi] or [lo, hi, step]");
          Range r{rj[0].get<std::int64_t>(), rj[1].get<std::int64_t>(), rj.size() == 3 ? rj[2].get<std::int64_t>() : 1};
          if (r.step <= 0) throw Error("range for '" + var + "': step must be positive");
          f.ranges[var] = r;
        }
      }
      for (const auto& var : tmpl.variables())
        if (!f.ranges.count(var)) throw Error("no range for template variable '" + var + "'");
      for (const auto& [var, r] : f.ranges) {
        const auto vars = tmpl.variables();
        if (std::find(vars.begin(), vars.end(), var) == vars.end())
          throw Error("range variable '" + var + "' does not occur in the template");
      }
      for (const auto& filter : fj.value("filters", json::array())) {
        Filter parsed = Filter::parse(filter.get<std::string>());
        if (!f.ranges.count(parsed.variable))
          throw Error("filter '" + parsed.text + "' names unknown variable '" + parsed.variable + "'");
        f.filters.push_back(std::move(parsed));
      }
      f.rule = fj.contains("rule") ? parse_rule(fj["rule"]) : RuleChoice::Auto;
    } catch (const ParseError& e) {
      throw ParseError(where + ", template '" + f.template_text + "': " + e.what(), e.position());
    } catch (const json::exception& e) {
      throw Error(where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    config.families.push_back(std::move(f));
  }
  return config;
}

SurveyConfig SurveyConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open survey config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return from_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string SurveyRecord::to_json() const {
  json j;
  j["family"] = family;
  j["template"] = template_text;
  j["expr"] = expr;
  j["params"] = params;
  j["conductor"] = conductor;
  j["w"] = weight;
  j["s"] = pole_order;
  j["c0"] = qgap::to_string(c0);
  j["beta"] = beta;
  j["gamma"] = gamma;
  j["L"] = largest_digit3;
  j["ord2"] = order_json(ord2);
  j["ord3"] = order_json(ord3);
  json cl = json::array();
  for (const auto& c : clauses)
    cl.push_back({{"rule", c.rule_id}, {"verdict", congruence::to_string(c.verdict)},
                  {"predicted", c.predicted}, {"observed", c.observed}});
  j["clauses"] = cl;
  j["rule_id"] = rule_id;
  j["verdict"] = congruence::to_string(verdict);
  return j.dump();
}

bool SurveyReport::ok() const {
  for (const auto& [name, count] : by_verdict)
    if (count > 0 && (name == "FAIL" || name == "ZERO_CONSTANT_TERM")) return false;
  return true;
}

std::string SurveyReport::summary_json() const {
  json j;
  j["summary"] = {{"config", config_name},
                  {"records", records.size()},
                  {"by_verdict", by_verdict},
                  {"by_rule", by_rule},
                  {"ok", ok()}};
  j["config"] = config_echo.empty() ? json::object() : json::parse(config_echo);
  j["timestamp"] = timestamp;
  return j.dump();
}

void SurveyReport::write_json_lines(std::ostream& out) const {
  for (const auto& r : records) out << r.to_json() << '\n';
  out << summary_json() << '\n';
}

void SurveyReport::write_table(std::ostream& out) const {
  std::vector<std::vector<std::string>> rows{{"expr", "N", "w", "s", "c0", "ord2", "ord3", "rule", "verdict"}};
  for (const auto& r : records)
    rows.push_back({r.expr, std::to_string(r.conductor), std::to_string(r.weight), std::to_string(r.pole_order),
                    abbreviate(qgap::to_string(r.c0), 28), r.ord2.to_string(), r.ord3.to_string(), r.rule_id,
                    congruence::to_string(r.verdict)});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      out << (i + 1 < row.size() ? "  " : "\n");
    }
  }
  out << records.size() << " records";
  for (const auto& [name, count] : by_verdict) out << ", " << count << ' ' << name;
  out << '\n';
}

SurveyRecord classify_expr(const FormExpr& expr, RuleChoice rule) {
  SurveyRecord r;
  r.expr = expr.to_string();
  r.conductor = expr.conductor();
  r.weight = expr.weight();
  r.pole_order = expr.pole_order();
  r.c0 = forms::constant_term(expr);
  if (r.pole_order > 0) {
    r.beta = digit_sum(r.pole_order, 2);
    r.gamma = digit_sum(r.pole_order, 3);
    r.largest_digit3 = largest_digit(r.pole_order, 3);
  }
  r.ord2 = ord_p(r.c0, 2);
  r.ord3 = ord_p(r.c0, 3);
  switch (rule) {
    case RuleChoice::Auto: r.clauses = congruence::classify(r.conductor, r.weight, r.pole_order, r.c0); break;
    case RuleChoice::Conductor1: r.clauses = congruence::classify(1, r.weight, r.pole_order, r.c0); break;
    case RuleChoice::Conductor2: r.clauses = congruence::classify(2, r.weight, r.pole_order, r.c0); break;
    case RuleChoice::Conductor3: r.clauses = congruence::classify(3, r.weight, r.pole_order, r.c0); break;
    case RuleChoice::Deviation: {
      const auto& fs = expr.factors();
      if (fs.size() != 1 || fs.front().generator.kind != forms::GeneratorKind::EN || fs.front().exponent >= 0)
        throw DomainError("deviation rules apply to E(N,inf,k)^-a only, got " + r.expr);
      const auto& g = fs.front().generator;
      r.clauses = {congruence::deviation_rule(g.p1, g.p2, -fs.front().exponent, r.c0)};
      break;
    }
    case RuleChoice::None: r.clauses = {{"none", Verdict::NotApplicable, "", ""}}; break;
  }
  std::vector<std::string> ids;
  for (const auto& c : r.clauses) ids.push_back(c.rule_id);
  r.rule_id = join(ids, ",");
  r.verdict = congruence::combine(r.clauses);
  return r;
}

SurveyReport run_survey(const SurveyConfig& config, int jobs) {
  std::vector<Task> tasks;
  for (std::size_t fi = 0; fi < config.families.size(); ++fi) {
    const auto& fam = config.families[fi];
    const FormTemplate tmpl = FormTemplate::parse(fam.template_text);
    for (auto& env : fam.instances()) {
      try {
        FormExpr expr = tmpl.instantiate(env);
        tasks.push_back({fi, std::move(env), std::move(expr)});
      } catch (const ParseError& e) {
        throw ParseError("family '" + fam.name + "', template '" + fam.template_text + "': " + e.what(),
                         e.position());
      }
    }
  }
  std::stable_sort(tasks.begin(), tasks.end(), [&](const Task& a, const Task& b) {
    const auto& fa = config.families[a.family];
    const auto& fb = config.families[b.family];
    if (fa.template_text != fb.template_text) return fa.template_text < fb.template_text;
    if (a.params != b.params) return a.params < b.params;
    return fa.name < fb.name;
  });

  std::vector<SurveyRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const auto& fam = config.families[tasks[i].family];
        SurveyRecord r = classify_expr(tasks[i].expr, fam.rule);
        r.family = fam.name;
        r.template_text = fam.template_text;
        r.params = tasks[i].params;
        records[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  unsigned n = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks.size(), 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SurveyReport report;
  report.config_name = config.name;
  report.config_echo = config.echo;
  report.timestamp = utc_timestamp();
  report.records = std::move(records);
  for (const auto& r : report.records) {
    ++report.by_verdict[congruence::to_string(r.verdict)];
    for (const auto& c : r.clauses) ++report.by_rule[c.rule_id][congruence::to_string(c.verdict)];
  }
  return report;
}

}  // namespace qgap::survey
