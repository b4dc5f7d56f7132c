#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewpbw/coefficient.hpp"
#include "skewpbw/lyndon.hpp"
#include "skewpbw/poly.hpp"

namespace skewpbw {

/// Syntax or name error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ExprAst {
  enum class Kind { Variable, Integer, Symbol, Unknown, SuperLetter, Negate, Sum, Difference, Product, Quotient, Bracket, Power };

  Kind kind = Kind::Integer;
  /// Variable: 1 or 2. Unknown: index into the unknown list. SuperLetter: 0..5 for A..F.
  int index = 0;
  /// Symbol: "q", "p12" or "p21". Integer: decimal digits.
  std::string text;
  int exponent = 0;
  std::vector<std::shared_ptr<const ExprAst>> children;
  int line = 1;
  int column = 1;
};

/// Grammar:
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor (('*' | '/')? factor)*
///   factor  := atom ('^' ['-'] int)*
///   atom    := int | 'q' | 'p12' | 'p21' | 'x1' | 'x2' | unknown
///            | '[' expr ',' expr ']' | '[' 'A'..'F' ']' | '(' expr ')' | '-' factor
/// Division takes a scalar right operand; negative exponents apply to scalars only.
std::shared_ptr<const ExprAst> parse(const std::string& text, const std::vector<std::string>& unknowns = {});

/// Names of the coefficients used by generator templates.
const std::vector<std::string>& template_unknowns();

/// Polynomial affine in the unknowns: parts[0] + sum_k u_k * parts[k].
struct LinearPoly {
  std::vector<Poly<Coefficient>> parts;

  bool has_unknowns() const;
};

struct EvalContext {
  CharacterData<Coefficient> chars;
  /// Values substituted for [A]..[F]; empty entries make those names an error.
  std::array<Poly<Coefficient>, 6> letters;
  std::vector<std::string> unknowns;
};

/// The standard context: generic G2 characters and the six super-letter values.
const EvalContext& default_context();
/// The same with the template unknowns alpha .. tau enabled.
const EvalContext& template_context();

LinearPoly evaluate_linear(const ExprAst& ast, const EvalContext& ctx);
Poly<Coefficient> evaluate(const ExprAst& ast, const EvalContext& ctx);

Poly<Coefficient> parse_poly(const std::string& text, const EvalContext& ctx = default_context());
LinearPoly parse_linear(const std::string& text, const EvalContext& ctx = template_context());
/// Parses an expression that must evaluate to a constant.
Coefficient parse_scalar(const std::string& text);

/// Extracts the bracket arrangement when the expression is a pure bracket of variables.
BracketTree to_bracket_tree(const ExprAst& ast);

}  // namespace skewpbw
