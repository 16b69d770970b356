#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bolzano/rational.hpp"

namespace bolzano::cli {

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression node. Which fields are meaningful depends on `kind`.
struct Expr {
  enum class Kind {
    Number,    // number
    BuiltinN,  // N
    Var,       // name: n, k or x depending on context
    Ident,     // name: a let binding
    Add,       // args[0] + args[1]
    Sub,       // args[0] - args[1]
    Mul,       // args[0] * args[1]
    Neg,       // -args[0]
    Pow,       // args[0] ^ integer
    PowVar,    // args[0] ^ name (exponential sequence b^n)
    Delay,     // delay(args[0], integer)
    Patch,     // patch(args[0], {overrides})
    Series,    // series(args[0]) from integer
    Geom,      // geom(number)
  };

  Kind kind = Kind::Number;
  SourcePos pos;
  Rational number;
  Rational integer;  // exponent / shift / start; range-checked at execution
  std::string name;
  std::vector<ExprPtr> args;
  std::vector<std::pair<Rational, Rational>> overrides;
};

/// A function argument: a registry name or an inline `x -> polynomial`.
struct FnSpec {
  enum class Kind { Builtin, Lambda };

  Kind kind = Kind::Builtin;
  std::string name;
  ExprPtr body;
  std::string source;
};

struct Statement {
  enum class Kind { Let, Eval, Cmp, Classify, St, InfGreater, Close, Deriv, Cont, UCont, Assert };

  Kind kind = Kind::Eval;
  SourcePos pos;
  std::string name;            // Let
  std::vector<ExprPtr> args;   // quantity operands
  std::optional<FnSpec> fn;    // Deriv, Cont, UCont
  Rational point;              // Deriv, Cont
  std::shared_ptr<const Statement> inner;  // Assert
  std::string expected;                    // Assert
  std::optional<Rational> tolerance;       // Assert `~ tol`
};

}  // namespace bolzano::cli
