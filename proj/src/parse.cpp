#include "skewpbw/parse.hpp"

#include <cctype>

namespace skewpbw {

namespace {

struct Token {
  enum class Kind { End, Number, Ident, Punct };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c) != 0) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(c) != 0) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
      t.kind = Token::Kind::Number;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(c) != 0) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])) != 0) ++j;
      t.kind = Token::Kind::Ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::string("+-*/^()[],").find(static_cast<char>(c)) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    out.push_back(t);
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

using Node = std::shared_ptr<const ExprAst>;

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& unknowns)
      : toks_(std::move(tokens)), unknowns_(unknowns) {}

  Node parse_all() {
    Node n = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'", peek());
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_punct(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }
  Token take() { return toks_[pos_++]; }
  [[noreturn]] static void fail(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.column); }
  void expect(const char* p) {
    if (!at_punct(p)) fail(std::string("expected '") + p + "'" + (peek().kind == Token::Kind::End ? " before end of input" : ""), peek());
    ++pos_;
  }

  static Node make(ExprAst::Kind kind, const Token& at, std::vector<Node> children = {}) {
    auto n = std::make_shared<ExprAst>();
    n->kind = kind;
    n->line = at.line;
    n->column = at.column;
    n->children = std::move(children);
    return n;
  }

  Node expr() {
    Node lhs;
    if (at_punct("-")) {
      const Token t = take();
      lhs = make(ExprAst::Kind::Negate, t, {term()});
    } else {
      lhs = term();
    }
    while (at_punct("+") || at_punct("-")) {
      const Token t = take();
      lhs = make(t.text == "+" ? ExprAst::Kind::Sum : ExprAst::Kind::Difference, t, {lhs, term()});
    }
    return lhs;
  }

  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident) return true;
    return at_punct("(") || at_punct("[");
  }

  Node term() {
    Node lhs = factor();
    for (;;) {
      if (at_punct("*")) {
        const Token t = take();
        lhs = make(ExprAst::Kind::Product, t, {lhs, factor()});
      } else if (at_punct("/")) {
        const Token t = take();
        lhs = make(ExprAst::Kind::Quotient, t, {lhs, factor()});
      } else if (starts_factor()) {
        const Token& t = peek();
        lhs = make(ExprAst::Kind::Product, t, {lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  Node factor() {
    Node base = atom();
    while (at_punct("^")) {
      const Token t = take();
      bool negative = false;
      if (at_punct("-")) {
        take();
        negative = true;
      }
      if (peek().kind != Token::Kind::Number) fail("expected integer exponent", peek());
      const Token num = take();
      if (num.text.size() > 6) fail("exponent too large", num);
      auto n = std::make_shared<ExprAst>();
      n->kind = ExprAst::Kind::Power;
      n->line = t.line;
      n->column = t.column;
      n->exponent = (negative ? -1 : 1) * std::stoi(num.text);
      n->children = {base};
      base = n;
    }
    return base;
  }

  Node atom() {
    const Token t = peek();
    if (t.kind == Token::Kind::Number) {
      take();
      auto n = std::make_shared<ExprAst>();
      n->kind = ExprAst::Kind::Integer;
      n->text = t.text;
      n->line = t.line;
      n->column = t.column;
      return n;
    }
    if (t.kind == Token::Kind::Ident) {
      take();
      auto n = std::make_shared<ExprAst>();
      n->line = t.line;
      n->column = t.column;
      if (t.text == "x1" || t.text == "x2") {
        n->kind = ExprAst::Kind::Variable;
        n->index = t.text == "x1" ? 1 : 2;
        return n;
      }
      if (t.text == "q" || t.text == "p12" || t.text == "p21") {
        n->kind = ExprAst::Kind::Symbol;
        n->text = t.text;
        return n;
      }
      for (std::size_t k = 0; k < unknowns_.size(); ++k) {
        if (unknowns_[k] == t.text) {
          n->kind = ExprAst::Kind::Unknown;
          n->index = static_cast<int>(k) + 1;
          n->text = t.text;
          return n;
        }
      }
      fail("unknown symbol '" + t.text + "'", t);
    }
    if (at_punct("-")) {
      take();
      return make(ExprAst::Kind::Negate, t, {factor()});
    }
    if (at_punct("(")) {
      take();
      Node inner = expr();
      expect(")");
      return inner;
    }
    if (at_punct("[")) {
      take();
      const Token& name = peek();
      if (name.kind == Token::Kind::Ident && name.text.size() == 1 && name.text[0] >= 'A' && name.text[0] <= 'F' &&
          toks_[pos_ + 1].kind == Token::Kind::Punct && toks_[pos_ + 1].text == "]") {
        auto n = std::make_shared<ExprAst>();
        n->kind = ExprAst::Kind::SuperLetter;
        n->index = name.text[0] - 'A';
        n->text = name.text;
        n->line = t.line;
        n->column = t.column;
        pos_ += 2;
        return n;
      }
      Node left = expr();
      expect(",");
      Node right = expr();
      expect("]");
      return make(ExprAst::Kind::Bracket, t, {left, right});
    }
    if (t.kind == Token::Kind::End) fail("unexpected end of input", t);
    fail("unexpected '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& unknowns_;
  std::size_t pos_ = 0;
};

[[noreturn]] void eval_fail(const std::string& msg, const ExprAst& at) { throw ParseError(msg, at.line, at.column); }

std::size_t width(const EvalContext& ctx) { return ctx.unknowns.size() + 1; }

LinearPoly constant(const Poly<Coefficient>& p, const EvalContext& ctx) {
  LinearPoly r;
  r.parts.assign(width(ctx), Poly<Coefficient>());
  r.parts[0] = p;
  return r;
}

bool is_scalar_poly(const Poly<Coefficient>& p) {
  return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty());
}

Coefficient scalar_of(const Poly<Coefficient>& p) { return p.coefficient(Word()); }

LinearPoly combine(const LinearPoly& a, const LinearPoly& b, int sign) {
  LinearPoly r = a;
  for (std::size_t k = 0; k < r.parts.size(); ++k) {
    if (sign > 0) {
      r.parts[k] += b.parts[k];
    } else {
      r.parts[k] -= b.parts[k];
    }
  }
  return r;
}

template <class Op>
LinearPoly bilinear(const LinearPoly& a, const LinearPoly& b, const ExprAst& at, Op op) {
  if (a.has_unknowns() && b.has_unknowns()) eval_fail("product of two expressions with unknowns is not linear", at);
  LinearPoly r;
  r.parts.assign(a.parts.size(), Poly<Coefficient>());
  if (a.has_unknowns()) {
    for (std::size_t k = 0; k < a.parts.size(); ++k) r.parts[k] = op(a.parts[k], b.parts[0]);
  } else {
    for (std::size_t k = 0; k < b.parts.size(); ++k) r.parts[k] = op(a.parts[0], b.parts[k]);
  }
  return r;
}

}  // namespace

bool LinearPoly::has_unknowns() const {
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (!parts[k].is_zero()) return true;
  }
  return false;
}

std::shared_ptr<const ExprAst> parse(const std::string& text, const std::vector<std::string>& unknowns) {
  Parser p(tokenize(text), unknowns);
  return p.parse_all();
}

const std::vector<std::string>& template_unknowns() {
  static const std::vector<std::string> names = {"alpha", "beta", "gamma", "delta", "epsilon", "tau"};
  return names;
}

LinearPoly evaluate_linear(const ExprAst& ast, const EvalContext& ctx) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::Variable:
      return constant(Poly<Coefficient>::var(ast.index), ctx);
    case K::Integer:
      return constant(Poly<Coefficient>(Coefficient(LaurentPoly(Integer(ast.text)))), ctx);
    case K::Symbol: {
      Coefficient c = ast.text == "q" ? Coefficient::q() : ast.text == "p12" ? Coefficient::p12() : Coefficient::p21();
      return constant(Poly<Coefficient>(c), ctx);
    }
    case K::Unknown: {
      LinearPoly r = constant(Poly<Coefficient>(), ctx);
      if (static_cast<std::size_t>(ast.index) >= r.parts.size()) eval_fail("unknown '" + ast.text + "' not enabled", ast);
      r.parts[static_cast<std::size_t>(ast.index)] = Poly<Coefficient>(Coefficient(1));
      return r;
    }
    case K::SuperLetter: {
      const auto& v = ctx.letters[static_cast<std::size_t>(ast.index)];
      if (v.is_zero()) eval_fail("super-letter [" + ast.text + "] is not available", ast);
      return constant(v, ctx);
    }
    case K::Negate: {
      LinearPoly r = evaluate_linear(*ast.children[0], ctx);
      for (auto& p : r.parts) p = -p;
      return r;
    }
    case K::Sum:
    case K::Difference:
      return combine(evaluate_linear(*ast.children[0], ctx), evaluate_linear(*ast.children[1], ctx),
                     ast.kind == K::Sum ? 1 : -1);
    case K::Product:
      return bilinear(evaluate_linear(*ast.children[0], ctx), evaluate_linear(*ast.children[1], ctx), ast,
                      [](const Poly<Coefficient>& f, const Poly<Coefficient>& g) { return f * g; });
    case K::Quotient: {
      const LinearPoly den = evaluate_linear(*ast.children[1], ctx);
      if (den.has_unknowns() || !is_scalar_poly(den.parts[0])) eval_fail("division requires a scalar divisor", ast);
      const Coefficient d = scalar_of(den.parts[0]);
      if (d.is_zero()) eval_fail("division by zero", ast);
      LinearPoly r = evaluate_linear(*ast.children[0], ctx);
      const Coefficient inv = d.inverse();
      for (auto& p : r.parts) p *= inv;
      return r;
    }
    case K::Bracket:
      return bilinear(evaluate_linear(*ast.children[0], ctx), evaluate_linear(*ast.children[1], ctx), ast,
                      [&](const Poly<Coefficient>& f, const Poly<Coefficient>& g) { return skew_bracket(f, g, ctx.chars); });
    case K::Power: {
      const LinearPoly base = evaluate_linear(*ast.children[0], ctx);
      if (base.has_unknowns()) eval_fail("powers of unknowns are not linear", ast);
      if (ast.exponent < 0) {
        if (!is_scalar_poly(base.parts[0])) eval_fail("negative exponents apply to scalars only", ast);
        const Coefficient c = scalar_of(base.parts[0]);
        if (c.is_zero()) eval_fail("zero to a negative power", ast);
        return constant(Poly<Coefficient>(c.pow(ast.exponent)), ctx);
      }
      return constant(power(base.parts[0], ast.exponent), ctx);
    }
  }
  eval_fail("malformed expression", ast);
}

Poly<Coefficient> evaluate(const ExprAst& ast, const EvalContext& ctx) {
  LinearPoly r = evaluate_linear(ast, ctx);
  if (r.has_unknowns()) eval_fail("expression contains unknowns", ast);
  return r.parts[0];
}

namespace {

EvalContext make_context(bool with_unknowns) {
  EvalContext ctx;
  ctx.chars = make_g2_characters(Coefficient::q(), Coefficient::p12());
  const char* words[6] = {"x1", "x1x2", "x1x2x1x2x2", "x1x2x2", "x1x2x2x2", "x2"};
  for (int k = 0; k < 6; ++k) ctx.letters[static_cast<std::size_t>(k)] = superletter_value(shirshov_bracketing(Word::parse(words[k])), ctx.chars);
  if (with_unknowns) ctx.unknowns = template_unknowns();
  return ctx;
}

}  // namespace

const EvalContext& default_context() {
  static const EvalContext ctx = make_context(false);
  return ctx;
}

const EvalContext& template_context() {
  static const EvalContext ctx = make_context(true);
  return ctx;
}

Poly<Coefficient> parse_poly(const std::string& text, const EvalContext& ctx) {
  return evaluate(*parse(text, ctx.unknowns), ctx);
}

LinearPoly parse_linear(const std::string& text, const EvalContext& ctx) {
  return evaluate_linear(*parse(text, ctx.unknowns), ctx);
}

Coefficient parse_scalar(const std::string& text) {
  const auto ast = parse(text);
  const Poly<Coefficient> p = evaluate(*ast, default_context());
  if (!is_scalar_poly(p)) throw ParseError("expected a scalar expression", ast->line, ast->column);
  return scalar_of(p);
}

BracketTree to_bracket_tree(const ExprAst& ast) {
  if (ast.kind == ExprAst::Kind::Variable) return BracketTree::leaf(ast.index);
  if (ast.kind == ExprAst::Kind::Bracket) {
    return BracketTree::node(to_bracket_tree(*ast.children[0]), to_bracket_tree(*ast.children[1]));
  }
  eval_fail("not a bracket of variables", ast);
}

}  // namespace skewpbw
