#include "qgap/evaluator.hpp"

#include <mutex>

#include "qgap/error.hpp"

namespace qgap::forms {

namespace {

QSeries shifted(const QSeries& unit, std::int64_t valuation) {
  return QSeries(valuation, std::vector<Rational>(unit.coefficients().begin(), unit.coefficients().end()));
}

bool is_einf4(const Generator& g) {
  return g.kind == GeneratorKind::Einf4 || (g.kind == GeneratorKind::EN && g.p1 == 2 && g.p2 == 4);
}

}  // namespace

QSeries Evaluator::compute_power(const Generator& g, std::int64_t e, std::int64_t prec) {
  // Product fast paths: Delta^e = q^e prod (1-q^n)^{24e};
  // E_inf4^e = q^e prod_{n even} (1-q^n)^{8e} prod_{n odd} (1-q^n)^{-8e}.
  if (g.kind == GeneratorKind::Delta)
    return shifted(product_expand([e](std::int64_t) { return 24 * e; }, prec), e);
  if (is_einf4(g)) {
    if (e < 0) return neg_power_Einf4(-e, prec);
    return shifted(product_expand([e](std::int64_t n) { return n % 2 == 0 ? 8 * e : -8 * e; }, prec), e);
  }
  return pow_int(expand(g, prec), e);
}

QSeries Evaluator::power(const Generator& g, std::int64_t e, std::int64_t prec) {
  if (prec <= 0) throw DomainError("precision must be positive, got " + std::to_string(prec));
  const auto key = std::make_pair(g, e);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second.terms() >= prec) return it->second.truncated_terms(prec);
  }
  g.validate();
  QSeries s = compute_power(g, e, prec);
  if (s.valuation() != e * g.valuation() || s.terms() < prec)
    throw Error("internal defect: " + g.name() + "^" + std::to_string(e) + " expanded with valuation " +
                std::to_string(s.valuation()) + " and " + std::to_string(s.terms()) + " terms");
  {
    std::unique_lock lock(mutex_);
    auto& slot = memo_[key];
    if (slot.terms() < s.terms()) slot = s;
  }
  return s;
}

QSeries Evaluator::eval(const FormExpr& expr, std::int64_t prec) {
  if (prec <= 0) throw DomainError("precision must be positive, got " + std::to_string(prec));
  QSeries result = QSeries::one(prec);
  for (const auto& f : expr.factors()) result = result * power(f.generator, f.exponent, prec);
  if (result.valuation() != expr.valuation() || result.terms() < prec)
    throw Error("internal defect: reach propagation for " + expr.to_string());
  return result;
}

Rational Evaluator::constant_term(const FormExpr& expr) {
  const std::int64_t v = expr.valuation();
  if (v > 0) return 0;
  const std::int64_t prec = 1 - v;
  const auto& fs = expr.factors();
  if (fs.empty()) return 1;
  QSeries head = QSeries::one(prec);
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) head = head * power(fs[i].generator, fs[i].exponent, prec);
  return constant_term_of_product(head, power(fs.back().generator, fs.back().exponent, prec));
}

std::size_t Evaluator::cached_entries() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void Evaluator::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

Evaluator& shared_evaluator() {
  static Evaluator instance;
  return instance;
}

QSeries eval_expr(const FormExpr& expr, std::int64_t prec) { return shared_evaluator().eval(expr, prec); }

Rational constant_term(const FormExpr& expr) { return shared_evaluator().constant_term(expr); }

}  // namespace qgap::forms
