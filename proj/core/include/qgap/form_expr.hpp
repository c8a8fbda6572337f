#pragma once

// Monomials over the generator catalog and their text grammar:
//
//   expr := term (('*' | whitespace) term)*
//   term := gen ('^' signed-integer)?
//   gen  := 'Delta' | 'Delta2' | 'j' | 'j2' | 'G(' even-int ')' | 'Egamma2'
//         | 'E04' | 'Einf4' | 'E(' N ',inf,' k ')' | 'phi(' N ')' | 'Phi(' N ')'
//         | 'S(' n ',' d ')' | 'T(' h ')' | 'T2(' h ')'
//
// Survey templates may put a placeholder wherever an integer is expected:
// "G(2a)^-1 * Einf4^-b", "E(3,inf,k)^-a".

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qgap/forms.hpp"

namespace qgap::forms {

struct Factor {
  Generator generator;
  std::int64_t exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

class FormExpr {
 public:
  FormExpr() = default;
  /// Merges repeated generators; factors with total exponent zero are dropped.
  explicit FormExpr(std::vector<Factor> factors);

  /// Throws ParseError (with position) on malformed text or zero exponents.
  static FormExpr parse(std::string_view text);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  std::int64_t weight() const;
  std::int64_t valuation() const;
  /// Order of the pole at infinity (0 if holomorphic there).
  std::int64_t pole_order() const;
  /// lcm of the generator conductors (1 for the empty product).
  std::int64_t conductor() const;
  /// False when G(2) occurs.
  bool is_modular() const;

  /// Canonical text, parseable by parse().
  std::string to_string() const;

  friend bool operator==(const FormExpr&, const FormExpr&) = default;

 private:
  std::vector<Factor> factors_;
};

using Bindings = std::map<std::string, std::int64_t>;

/// A FormExpr with integer placeholders.
class FormTemplate {
 public:
  /// An integer slot: sign * (constant | multiplier * variable).
  struct Slot {
    std::int64_t multiplier = 0;
    std::string variable;  // empty for a literal
    std::int64_t constant = 0;
    std::size_t position = 0;

    std::int64_t eval(const Bindings& env) const;
  };

  static FormTemplate parse(std::string_view text);

  /// Substitute the bindings. Factors whose exponent evaluates to 0 are
  /// omitted; other invalid instantiations throw ParseError naming the slot.
  FormExpr instantiate(const Bindings& env) const;

  std::vector<std::string> variables() const;
  const std::string& text() const noexcept { return text_; }

 private:
  struct TermTemplate {
    GeneratorKind kind;
    std::vector<Slot> params;
    Slot exponent;
    std::size_t position = 0;
  };

  std::string text_;
  std::vector<TermTemplate> terms_;
};

}  // namespace qgap::forms
