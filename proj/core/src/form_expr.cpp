#include "qgap/form_expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "qgap/error.hpp"

namespace qgap::forms {

namespace {

struct Keyword {
  std::string_view text;
  GeneratorKind kind;
  int params;  // number of integer slots inside parentheses
};

constexpr Keyword kKeywords[] = {
    {"Delta", GeneratorKind::Delta, 0},   {"Delta2", GeneratorKind::Delta2, 0},
    {"j", GeneratorKind::J, 0},           {"j2", GeneratorKind::J2, 0},
    {"G", GeneratorKind::G, 1},           {"Egamma2", GeneratorKind::Egamma2, 0},
    {"E04", GeneratorKind::E04, 0},       {"Einf4", GeneratorKind::Einf4, 0},
    {"E", GeneratorKind::EN, 2},          {"phi", GeneratorKind::PhiSmall, 1},
    {"Phi", GeneratorKind::PhiBig, 1},    {"S", GeneratorKind::S, 2},
    {"T", GeneratorKind::T, 1},           {"T2", GeneratorKind::T2, 1},
};

constexpr std::string_view kGeneratorSet =
    "{Delta, Delta2, j, j2, G(, Egamma2, E04, Einf4, E(, phi(, Phi(, S(, T(, T2(}";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(std::string_view expected) {
    skip_ws();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": expected one of " +
                         std::string(expected) + " but found " + found + " in \"" + std::string(text_) + "\"",
                     pos_);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("{'") + c + "'}");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("{'" + std::string(w) + "'}");
    pos_ += w.size();
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) return {};
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  FormTemplate::Slot slot() {
    FormTemplate::Slot s;
    skip_ws();
    s.position = pos_;
    std::int64_t sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    bool have_digits = false;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40)) fail("{integer of reasonable size}");
      have_digits = true;
      ++pos_;
    }
    // A placeholder either follows the digits directly ("2a") or stands alone.
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      s.variable = identifier();
      s.multiplier = sign * (have_digits ? value : 1);
      return s;
    }
    if (!have_digits) fail("{integer, placeholder}");
    s.constant = sign * value;
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace

FormExpr::FormExpr(std::vector<Factor> factors) {
  for (const auto& f : factors) {
    auto it = std::find_if(factors_.begin(), factors_.end(),
                           [&](const Factor& g) { return g.generator == f.generator; });
    if (it == factors_.end()) factors_.push_back(f);
    else it->exponent += f.exponent;
  }
  std::erase_if(factors_, [](const Factor& f) { return f.exponent == 0; });
  for (const auto& f : factors_) f.generator.validate();
}

FormExpr FormExpr::parse(std::string_view text) {
  const FormTemplate t = FormTemplate::parse(text);
  const auto vars = t.variables();
  if (!vars.empty()) throw ParseError("unbound placeholder '" + vars.front() + "' in \"" + std::string(text) + "\"", 0);
  return t.instantiate({});
}

std::int64_t FormExpr::weight() const {
  std::int64_t w = 0;
  for (const auto& f : factors_) w += f.exponent * f.generator.weight();
  return w;
}

std::int64_t FormExpr::valuation() const {
  std::int64_t v = 0;
  for (const auto& f : factors_) v += f.exponent * f.generator.valuation();
  return v;
}

std::int64_t FormExpr::pole_order() const { return std::max<std::int64_t>(0, -valuation()); }

std::int64_t FormExpr::conductor() const {
  std::int64_t c = 1;
  for (const auto& f : factors_) c = lcm64(c, f.generator.conductor());
  return c;
}

bool FormExpr::is_modular() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.generator.is_modular(); });
}

std::string FormExpr::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.generator.name();
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::int64_t FormTemplate::Slot::eval(const Bindings& env) const {
  if (variable.empty()) return constant;
  auto it = env.find(variable);
  if (it == env.end()) throw ParseError("unbound placeholder '" + variable + "'", position);
  return multiplier * it->second;
}

FormTemplate FormTemplate::parse(std::string_view text) {
  FormTemplate t;
  t.text_ = std::string(text);
  Parser p(text);
  if (p.at_end()) p.fail(kGeneratorSet);

  while (true) {
    TermTemplate term;
    p.skip_ws();
    term.position = p.position();
    const std::string word = p.identifier();
    const Keyword* kw = nullptr;
    for (const auto& k : kKeywords)
      if (k.text == word) kw = &k;
    if (kw == nullptr) {
      throw ParseError("parse error at column " + std::to_string(term.position + 1) + ": expected one of " +
                           std::string(kGeneratorSet) + " but found '" + (word.empty() ? std::string(1, p.peek()) : word) +
                           "' in \"" + std::string(text) + "\"",
                       term.position);
    }
    term.kind = kw->kind;
    if (kw->params > 0) {
      p.expect('(');
      term.params.push_back(p.slot());
      if (kw->kind == GeneratorKind::EN) {
        p.expect(',');
        p.expect_word("inf");
        p.expect(',');
        term.params.push_back(p.slot());
      } else if (kw->params == 2) {
        p.expect(',');
        term.params.push_back(p.slot());
      }
      p.expect(')');
    }
    term.exponent.constant = 1;
    if (p.peek() == '^') {
      p.expect('^');
      term.exponent = p.slot();
      if (term.exponent.variable.empty() && term.exponent.constant == 0)
        throw ParseError("parse error at column " + std::to_string(term.exponent.position + 1) +
                             ": exponent must be a nonzero integer in \"" + std::string(text) + "\"",
                         term.exponent.position);
    }
    t.terms_.push_back(std::move(term));

    if (p.at_end()) break;
    if (p.peek() == '*') {
      p.expect('*');
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(p.peek()))) p.fail("{'*', '^', generator, end of input}");
  }
  return t;
}

FormExpr FormTemplate::instantiate(const Bindings& env) const {
  std::vector<Factor> factors;
  for (const auto& term : terms_) {
    Generator g{term.kind, 0, 0};
    if (!term.params.empty()) g.p1 = term.params[0].eval(env);
    if (term.params.size() > 1) g.p2 = term.params[1].eval(env);
    const std::int64_t e = term.exponent.eval(env);
    if (e == 0) continue;
    try {
      g.validate();
    } catch (const DomainError& err) {
      throw ParseError("invalid generator at column " + std::to_string(term.position + 1) + " of \"" + text_ +
                           "\": " + err.what(),
                       term.position);
    }
    factors.push_back({g, e});
  }
  return FormExpr(std::move(factors));
}

std::vector<std::string> FormTemplate::variables() const {
  std::set<std::string> seen;
  std::vector<std::string> out;
  auto note = [&](const Slot& s) {
    if (!s.variable.empty() && seen.insert(s.variable).second) out.push_back(s.variable);
  };
  for (const auto& t : terms_) {
    for (const auto& s : t.params) note(s);
    note(t.exponent);
  }
  return out;
}

}  // namespace qgap::forms
