#include "qgap/suites.hpp"

#include <algorithm>

#include "qgap/catalog.hpp"
#include "qgap/coefficients.hpp"
#include "qgap/error.hpp"
#include "qgap/forms.hpp"
#include "qgap/identities.hpp"
#include "qgap/quadratic.hpp"
#include "qgap/siegel.hpp"

namespace qgap::suites {

namespace {

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::string ord_text(const POrder& o) { return o.to_string(); }

}  // namespace

std::map<std::string, std::map<std::string, std::int64_t>> SuiteReport::counts() const {
  std::map<std::string, std::map<std::string, std::int64_t>> out;
  for (const auto& l : lines) ++out[l.group][congruence::to_string(l.verdict)];
  return out;
}

bool SuiteReport::ok() const {
  return std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return congruence::is_failure(l.verdict); });
}

std::int64_t SuiteReport::count(Verdict v) const {
  return std::count_if(lines.begin(), lines.end(), [v](const CheckLine& l) { return l.verdict == v; });
}

SuiteReport identities(std::int64_t terms) {
  SuiteReport r{"identities", {}};
  for (const auto& c : identities::identity_checks(terms))
    r.lines.push_back({"identity", c.name, pass_if(c.holds),
                       c.holds ? std::to_string(c.terms) + " coefficients"
                               : "first mismatch at q^" + std::to_string(c.first_mismatch)});
  return r;
}

SuiteReport satz(const defaults::Scale& scale) {
  SuiteReport r{"satz", {}};
  for (std::int64_t level : {2, 1}) {
    const std::int64_t h_max = level == 2 ? scale.satz_level2_h_max : scale.satz_level1_h_max;
    for (const auto& s : siegel::satz_suite(level, 2, h_max))
      r.lines.push_back({"vanishing level " + std::to_string(level), s.form_id, s.verdict, "c0=" + to_string(s.c0)});
  }
  for (std::int64_t h = 4; h <= scale.satz_level2_h_max; h += 4) {
    const auto t = siegel::constant_term_T2(h);
    r.lines.push_back({"T2 sign", "T2(" + std::to_string(h) + ")", t.verdict,
                       "r=" + std::to_string(t.r) + " expected sign " + (t.expected_sign > 0 ? "+" : "-") +
                           " c0=" + to_string(t.c0)});
  }
  // h = 2 mod 4: nonvanishing (and rule (2)) is only conjectured.
  for (std::int64_t h = 2; h <= scale.satz_level2_h_max; h += 4) {
    const Rational c0 = forms::t_series(2, h, forms::t_series_pole_order(2, h) + 1).coeff(0);
    const std::int64_t s = forms::t_series_pole_order(2, h);
    const auto clauses = congruence::classify_conductor2(2 - h, s, c0);
    r.lines.push_back({"T2 nonvanishing (conjectural)", "T2(" + std::to_string(h) + ")", Verdict::Experimental,
                       std::string(c0 != 0 ? "nonzero" : "ZERO") + " c0=" + to_string(c0) + " rule 2 " +
                           congruence::to_string(congruence::combine(clauses))});
  }
  return r;
}

SuiteReport gap(const defaults::Scale& scale) {
  SuiteReport r{"gap", {}};
  const auto results =
      siegel::gap_suite(2, scale.satz_level2_h_max, scale.gap_random_per_weight, scale.gap_seed);
  for (const auto& g : results) {
    const std::string item = "h=" + std::to_string(g.h) + " " + g.form_id;
    r.lines.push_back({"gap bound", item, g.verdict,
                       "first=" + std::to_string(g.first_nonzero_index) + " bound=" + std::to_string(g.bound)});
    if (g.within_sharper_bound)
      r.lines.push_back({"sharper bound r+1 (conjectural)", item, Verdict::Experimental,
                         std::string(*g.within_sharper_bound ? "within" : "EXCEEDS") + " r+1=" +
                             std::to_string(g.r + 1) + " first=" + std::to_string(g.first_nonzero_index)});
  }
  r.lines.push_back({"seed", "random combinations", Verdict::NotApplicable, std::to_string(scale.gap_seed)});
  return r;
}

SuiteReport congruences(const defaults::Scale& scale) {
  SuiteReport r{"congruences", {}};
  siegel::CongruenceOptions opt;
  opt.einf4_s_max = scale.einf4_s_max;
  opt.delta_s_max = scale.delta_s_max;
  opt.t_h_max = scale.t_h_max;
  for (const auto& t : siegel::constant_term_congruences(opt))
    r.lines.push_back({t.family, t.instance, t.verdict,
                       "predicted " + t.predicted + ", observed " + t.observed});
  return r;
}

SuiteReport rules(const defaults::Scale& scale, int jobs) {
  SuiteReport r{"rules", {}};
  for (const auto& name : survey::builtin_survey_names()) {
    const auto report = survey::run_survey(survey::builtin_survey(name, scale.full), jobs);
    for (const auto& rec : report.records) {
      std::string detail = "c0 ord2=" + ord_text(rec.ord2) + " ord3=" + ord_text(rec.ord3);
      for (const auto& c : rec.clauses)
        detail += "; " + c.rule_id + " " + congruence::to_string(c.verdict) + " (" + c.predicted + " | " + c.observed +
                  ")";
      r.lines.push_back({name, rec.expr, rec.verdict, detail});
    }
  }
  return r;
}

SuiteReport coefficients(const defaults::Scale& scale) {
  SuiteReport r{"coefficients", {}};
  const std::int64_t n_max = std::max({scale.delta_compare_n_max, scale.reciprocal_n_max, scale.lehner_n_max});
  const auto data = coefficients::CoefficientData::compute(n_max);
  for (std::int64_t p : {2, 3, 5}) {
    for (const auto& row : coefficients::delta_pn_compare(data, p, scale.delta_compare_n_max)) {
      std::string detail = "delta=" + (row.delta ? std::to_string(*row.delta) : std::string("undefined"));
      if (row.predicted) detail += " predicted=" + std::to_string(*row.predicted);
      r.lines.push_back({"delta p=" + std::to_string(p), "n=" + std::to_string(row.n), row.verdict, detail});
    }
  }
  for (const auto& row : coefficients::reciprocal_compare(data, scale.reciprocal_n_max))
    r.lines.push_back({"1/j vs Delta p=" + std::to_string(row.p), "n=" + std::to_string(row.n), row.verdict,
                       "ord(1/j)=" + ord_text(row.ord_inv_j) + " ord(tau)=" + ord_text(row.ord_delta)});
  for (const auto& row : coefficients::lehner_check(data, scale.lehner_n_max))
    r.lines.push_back({"Lehner p=" + std::to_string(row.p), "c(" + std::to_string(row.m) + ")", row.verdict,
                       "ord=" + ord_text(row.observed) + " required>=" + std::to_string(row.required)});
  return r;
}

SuiteReport quadratic(const defaults::Scale& scale) {
  using namespace qgap::quadratic;
  SuiteReport r{"quadratic", {}};
  const std::int64_t terms = scale.theta_terms;
  const GramMatrix D4 = d4();

  const ThetaSeries t = theta(D4, terms);
  const QSeries eg = forms::egamma2(terms + 1);
  bool same = true;
  for (std::int64_t n = 0; n <= terms; ++n) same = same && Rational(t[static_cast<std::size_t>(n)]) == eg.coeff(n);
  r.lines.push_back({"theta", "theta(D4) = Egamma2", pass_if(same), std::to_string(terms + 1) + " coefficients"});

  const std::int64_t pair_terms = std::min<std::int64_t>(terms, 12);
  const ThetaSeries tt = theta(direct_sum(D4, D4), pair_terms);
  bool conv = true;
  for (std::int64_t n = 0; n <= pair_terms; ++n) {
    Integer c = 0;
    for (std::int64_t k = 0; k <= n; ++k) c += t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(n - k)];
    conv = conv && c == tt[static_cast<std::size_t>(n)];
  }
  r.lines.push_back({"theta", "theta(D4+D4) = theta(D4)^2", pass_if(conv),
                     std::to_string(pair_terms + 1) + " coefficients"});

  r.lines.push_back({"level", "level(D4) = 2", pass_if(D4.level() == 2), "level=" + std::to_string(D4.level())});
  r.lines.push_back({"level", "level(E8) = 1", pass_if(e8().level() == 1), "level=" + std::to_string(e8().level())});

  GramMatrix sum = D4;
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) sum = direct_sum(sum, D4);
    const auto res = verify_minimum_bound(sum);
    r.lines.push_back({"minimum bound", "D4^" + std::to_string(k), res.verdict,
                       "v=" + std::to_string(res.rank) + " level=" + std::to_string(res.level) + " min=" +
                           std::to_string(res.minimum) + " bound=" + std::to_string(res.bound)});
    if (res.within_sharper_bound)
      r.lines.push_back({"sharper bound 3+v/4 (conjectural)", "D4^" + std::to_string(k), Verdict::Experimental,
                         *res.within_sharper_bound ? "within" : "EXCEEDS"});
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"identities", "satz", "gap", "congruences", "rules", "coefficients", "quadratic"};
}

SuiteReport run(const std::string& name, const defaults::Scale& scale, int jobs) {
  if (name == "identities") return identities();
  if (name == "satz") return satz(scale);
  if (name == "gap") return gap(scale);
  if (name == "congruences") return congruences(scale);
  if (name == "rules") return rules(scale, jobs);
  if (name == "coefficients") return coefficients(scale);
  if (name == "quadratic") return quadratic(scale);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace qgap::suites
