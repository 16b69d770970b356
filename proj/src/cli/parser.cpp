#include "bolzano/cli/parser.hpp"

#include <algorithm>
#include <set>

#include "bolzano/calculus.hpp"

namespace bolzano::cli {

namespace {

// Which free variable an expression may mention.
enum class Context { Quantity, Series, Lambda };

const std::set<std::string, std::less<>> kReserved = {
    "let", "assert", "cmp", "classify", "st", "infgreater", "close", "deriv", "cont", "ucont",
    "delay", "series", "from", "geom", "patch", "N", "n", "k", "x"};

class Parser {
 public:
  explicit Parser(std::string_view text, int line) : text_(text), tokens_(tokenize(text, line)) {}

  Statement statement() {
    Statement s = statement_body();
    expect(Token::Kind::End);
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(Token::Kind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const { return at(Token::Kind::Ident) && peek().text == word; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos, std::move(expected), found);
  }

  const Token& expect(Token::Kind kind) {
    if (!at(kind)) fail({std::string(describe(kind))});
    return advance();
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) fail({"'" + std::string(word) + "'"});
    advance();
  }

  Statement statement_body() {
    const Token& head = peek();
    Statement s;
    s.pos = head.pos;
    if (head.kind == Token::Kind::Ident && peek(1).kind == Token::Kind::LParen) {
      const std::string& w = head.text;
      auto unary = [&](Statement::Kind kind) {
        advance();
        advance();
        s.kind = kind;
        s.args.push_back(expression(Context::Quantity));
        expect(Token::Kind::RParen);
        return s;
      };
      auto binary = [&](Statement::Kind kind) {
        advance();
        advance();
        s.kind = kind;
        s.args.push_back(expression(Context::Quantity));
        expect(Token::Kind::Comma);
        s.args.push_back(expression(Context::Quantity));
        expect(Token::Kind::RParen);
        return s;
      };
      if (w == "cmp") return binary(Statement::Kind::Cmp);
      if (w == "classify") return unary(Statement::Kind::Classify);
      if (w == "st") return unary(Statement::Kind::St);
      if (w == "infgreater") return binary(Statement::Kind::InfGreater);
      if (w == "close") return binary(Statement::Kind::Close);
      if (w == "deriv" || w == "cont") {
        advance();
        advance();
        s.kind = w == "deriv" ? Statement::Kind::Deriv : Statement::Kind::Cont;
        s.fn = function();
        expect(Token::Kind::Comma);
        s.point = signed_rational();
        expect(Token::Kind::RParen);
        return s;
      }
      if (w == "ucont") {
        advance();
        advance();
        s.kind = Statement::Kind::UCont;
        s.fn = function();
        expect(Token::Kind::Comma);
        s.args.push_back(expression(Context::Quantity));
        expect(Token::Kind::Comma);
        s.args.push_back(expression(Context::Quantity));
        expect(Token::Kind::RParen);
        return s;
      }
    }
    if (at_word("let")) {
      advance();
      if (!at(Token::Kind::Ident) || kReserved.count(peek().text) != 0) fail({"binding name"});
      s.kind = Statement::Kind::Let;
      s.name = advance().text;
      expect(Token::Kind::Assign);
      s.args.push_back(expression(Context::Quantity));
      return s;
    }
    if (at_word("assert")) {
      advance();
      s.kind = Statement::Kind::Assert;
      auto inner = statement_body();
      if (inner.kind == Statement::Kind::Assert || inner.kind == Statement::Kind::Let) {
        throw SyntaxError(inner.pos, {"a query statement"}, "nested " + std::string(inner.kind == Statement::Kind::Let ? "let" : "assert"));
      }
      s.inner = std::make_shared<const Statement>(std::move(inner));
      expect(Token::Kind::EqEq);
      if (at(Token::Kind::End) || at(Token::Kind::Tilde)) fail({"expected value"});
      const std::size_t begin = peek().offset;
      while (!at(Token::Kind::End) && !at(Token::Kind::Tilde)) advance();
      s.expected = trim(text_.substr(begin, peek().offset - begin));
      if (at(Token::Kind::Tilde)) {
        advance();
        s.tolerance = signed_rational();
      }
      return s;
    }
    s.kind = Statement::Kind::Eval;
    s.args.push_back(expression(Context::Quantity));
    return s;
  }

  static std::string trim(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return std::string(v);
  }

  FnSpec function() {
    FnSpec fn;
    const std::size_t begin = peek().offset;
    if (at_word("x") && peek(1).kind == Token::Kind::Arrow) {
      advance();
      advance();
      fn.kind = FnSpec::Kind::Lambda;
      fn.name = "lambda";
      fn.body = expression(Context::Lambda);
    } else if (at(Token::Kind::Ident) && functions::builtin(peek().text)) {
      fn.kind = FnSpec::Kind::Builtin;
      fn.name = advance().text;
    } else {
      fail({"builtin function (sin, cos, exp, log, sqrt, abs, step)", "'x ->'"});
    }
    fn.source = trim(text_.substr(begin, peek().offset - begin));
    return fn;
  }

  // INT | INT '/' INT | DECIMAL
  Rational unsigned_rational() {
    if (at(Token::Kind::Decimal)) return Rational::parse(advance().text);
    const Token& num = expect(Token::Kind::Int);
    std::string text = num.text;
    if (at(Token::Kind::Slash)) {
      advance();
      const Token& den = expect(Token::Kind::Int);
      if (den.text.find_first_not_of('0') == std::string::npos)
        throw SyntaxError(den.pos, {"nonzero denominator"}, "'" + den.text + "'");
      text += "/" + den.text;
    }
    return Rational::parse(text);
  }

  Rational signed_rational() {
    bool negative = false;
    if (at(Token::Kind::Minus)) {
      advance();
      negative = true;
    }
    if (!at(Token::Kind::Int) && !at(Token::Kind::Decimal)) fail({"number"});
    Rational r = unsigned_rational();
    return negative ? -r : r;
  }

  Rational signed_integer() {
    bool negative = false;
    if (at(Token::Kind::Minus)) {
      advance();
      negative = true;
    }
    Rational r = Rational::parse(expect(Token::Kind::Int).text);
    return negative ? -r : r;
  }

  static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  static ExprPtr binary_node(Expr::Kind kind, SourcePos pos, ExprPtr lhs, ExprPtr rhs) {
    Expr e;
    e.kind = kind;
    e.pos = pos;
    e.args = {std::move(lhs), std::move(rhs)};
    return node(std::move(e));
  }

  ExprPtr expression(Context ctx) {
    ExprPtr lhs = term(ctx);
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      const Token& op = advance();
      lhs = binary_node(op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, lhs, term(ctx));
    }
    return lhs;
  }

  ExprPtr term(Context ctx) {
    ExprPtr lhs = unary(ctx);
    while (at(Token::Kind::Star)) {
      const Token& op = advance();
      lhs = binary_node(Expr::Kind::Mul, op.pos, lhs, unary(ctx));
    }
    return lhs;
  }

  ExprPtr unary(Context ctx) {
    if (at(Token::Kind::Minus)) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.pos = advance().pos;
      e.args = {unary(ctx)};
      return node(std::move(e));
    }
    return power(ctx);
  }

  static std::string_view variable_of(Context ctx) {
    switch (ctx) {
      case Context::Quantity: return "n";
      case Context::Series: return "k";
      case Context::Lambda: return "x";
    }
    return "n";
  }

  ExprPtr power(Context ctx) {
    ExprPtr base = primary(ctx);
    if (!at(Token::Kind::Caret)) return base;
    const Token& op = advance();
    Expr e;
    e.pos = op.pos;
    e.args = {std::move(base)};
    if (ctx != Context::Lambda && at_word(variable_of(ctx))) {
      e.kind = Expr::Kind::PowVar;
      e.name = advance().text;
      return node(std::move(e));
    }
    if (!at(Token::Kind::Int) && !at(Token::Kind::Minus)) {
      std::vector<std::string> expected{"integer exponent"};
      if (ctx != Context::Lambda) expected.push_back("'" + std::string(variable_of(ctx)) + "'");
      fail(expected);
    }
    e.kind = Expr::Kind::Pow;
    e.integer = signed_integer();
    return node(std::move(e));
  }

  ExprPtr primary(Context ctx) {
    const Token& t = peek();
    Expr e;
    e.pos = t.pos;
    if (t.kind == Token::Kind::Int || t.kind == Token::Kind::Decimal) {
      e.kind = Expr::Kind::Number;
      e.number = unsigned_rational();
      return node(std::move(e));
    }
    if (t.kind == Token::Kind::LParen) {
      advance();
      ExprPtr inner = expression(ctx);
      expect(Token::Kind::RParen);
      return inner;
    }
    if (t.kind == Token::Kind::Ident) {
      const std::string& w = t.text;
      if (w == variable_of(ctx)) {
        advance();
        e.kind = Expr::Kind::Var;
        e.name = w;
        return node(std::move(e));
      }
      if (ctx == Context::Quantity) {
        if (w == "N") {
          advance();
          e.kind = Expr::Kind::BuiltinN;
          return node(std::move(e));
        }
        if (peek(1).kind == Token::Kind::LParen) {
          if (w == "delay") return delay_call();
          if (w == "series") return series_call();
          if (w == "geom") return geom_call();
          if (w == "patch") return patch_call();
        }
        if (kReserved.count(w) == 0) {
          advance();
          e.kind = Expr::Kind::Ident;
          e.name = w;
          return node(std::move(e));
        }
      }
    }
    std::vector<std::string> expected{"number", "'('", "'" + std::string(variable_of(ctx)) + "'"};
    if (ctx == Context::Quantity) {
      for (const char* extra : {"'N'", "identifier", "'delay('", "'series('", "'geom('", "'patch('"}) expected.emplace_back(extra);
    }
    fail(expected);
  }

  ExprPtr delay_call() {
    Expr e;
    e.kind = Expr::Kind::Delay;
    e.pos = advance().pos;
    advance();
    e.args = {expression(Context::Quantity)};
    expect(Token::Kind::Comma);
    e.integer = Rational::parse(expect(Token::Kind::Int).text);
    expect(Token::Kind::RParen);
    return node(std::move(e));
  }

  ExprPtr series_call() {
    Expr e;
    e.kind = Expr::Kind::Series;
    e.pos = advance().pos;
    advance();
    e.args = {expression(Context::Series)};
    expect(Token::Kind::RParen);
    e.integer = Rational(1);
    if (at_word("from")) {
      advance();
      e.integer = Rational::parse(expect(Token::Kind::Int).text);
    }
    return node(std::move(e));
  }

  ExprPtr geom_call() {
    Expr e;
    e.kind = Expr::Kind::Geom;
    e.pos = advance().pos;
    advance();
    e.number = signed_rational();
    expect(Token::Kind::RParen);
    return node(std::move(e));
  }

  // patch(qexpr, {INT: rat, ...})
  ExprPtr patch_call() {
    Expr e;
    e.kind = Expr::Kind::Patch;
    e.pos = advance().pos;
    advance();
    e.args = {expression(Context::Quantity)};
    expect(Token::Kind::Comma);
    expect(Token::Kind::LBrace);
    if (!at(Token::Kind::RBrace)) {
      while (true) {
        Rational index = Rational::parse(expect(Token::Kind::Int).text);
        expect(Token::Kind::Colon);
        e.overrides.emplace_back(std::move(index), signed_rational());
        if (!at(Token::Kind::Comma)) break;
        advance();
      }
    }
    expect(Token::Kind::RBrace);
    expect(Token::Kind::RParen);
    return node(std::move(e));
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Statement parse(std::string_view text, int line) { return Parser(text, line).statement(); }

}  // namespace bolzano::cli
