#include "bolzano/cli/executor.hpp"

#include <sstream>

#include "bolzano/cli/parser.hpp"
#include "bolzano/series.hpp"

namespace bolzano::cli {

namespace {

// Guards that keep adversarial input from exhausting memory.
constexpr Index kMaxShift = 10'000;
constexpr Index kMaxPatchIndex = 100'000;
constexpr long long kMaxExponent = 1'000;
constexpr std::size_t kMaxBits = std::size_t{1} << 22;
constexpr std::size_t kMaxTerms = 4'096;

Index to_index(const Rational& r, Index lo, Index hi, const char* operation) {
  if (!r.is_integer()) throw Error(ErrorKind::InvalidArgument, operation, std::nullopt, "expected an integer");
  if (r < Rational(lo) || r > Rational(hi))
    throw Error(ErrorKind::LimitExceeded, operation, std::nullopt,
                r.pretty() + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<Index>(r.numerator().get_si());
}

std::size_t bits(const Rational& r) {
  return mpz_sizeinbase(r.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(r.raw().get_den_mpz_t(), 2);
}

Quantity guard_size(Quantity q, const char* operation) {
  if (q.is_lazy()) return q;
  const ExpPoly& body = q.body();
  if (body.size() > kMaxTerms) throw Error(ErrorKind::LimitExceeded, operation, std::nullopt, "too many terms");
  for (const auto& [key, coeff] : body.terms())
    if (bits(coeff) > kMaxBits || bits(key.base) > kMaxBits)
      throw Error(ErrorKind::LimitExceeded, operation, std::nullopt, "coefficient too large");
  return q;
}

Quantity power(const Quantity& base, long long exponent) {
  if (exponent < 0) {
    const auto& cf = base.closed_form("pow");
    if (cf.body.size() != 1 || !cf.patch.empty())
      throw Error(ErrorKind::InvalidArgument, "pow", std::nullopt, "negative powers need a single unpatched term");
    const auto& [key, coeff] = *cf.body.terms().begin();
    const ExpPoly inverse = ExpPoly::monomial(coeff.inverse(), -key.power, key.base.inverse());
    return power(Quantity::closed(inverse), -exponent);
  }
  Quantity result = embed_scalar(Rational(1));
  Quantity square = base;
  while (exponent > 0) {
    if (exponent & 1) result = guard_size(mul(result, square), "pow");
    exponent >>= 1;
    if (exponent > 0) square = guard_size(mul(square, square), "pow");
  }
  return result;
}

Rational scalar_power(const Rational& base, long long exponent) {
  if (exponent < 0 && base.is_zero()) throw Error(ErrorKind::DomainViolation, "lambda", std::nullopt, "division by zero");
  const Rational r = base.pow(exponent);
  if (bits(r) > kMaxBits) throw Error(ErrorKind::LimitExceeded, "lambda", std::nullopt, "value too large");
  return r;
}

// Lambda bodies are polynomials in x; evaluate them pointwise.
Rational evaluate_scalar(const Expr& e, const Rational& x) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number;
    case Expr::Kind::Var: return x;
    case Expr::Kind::Add: return evaluate_scalar(*e.args[0], x) + evaluate_scalar(*e.args[1], x);
    case Expr::Kind::Sub: return evaluate_scalar(*e.args[0], x) - evaluate_scalar(*e.args[1], x);
    case Expr::Kind::Mul: return evaluate_scalar(*e.args[0], x) * evaluate_scalar(*e.args[1], x);
    case Expr::Kind::Neg: return -evaluate_scalar(*e.args[0], x);
    case Expr::Kind::Pow: {
      const Index exponent = to_index(e.integer, -kMaxExponent, kMaxExponent, "pow");
      return scalar_power(evaluate_scalar(*e.args[0], x), exponent);
    }
    default: throw Error(ErrorKind::InvalidArgument, "lambda", std::nullopt, "unsupported construct in function body");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string normalize_space(const std::string& s) {
  std::istringstream in(s);
  std::string word, out;
  while (in >> word) out += (out.empty() ? "" : " ") + word;
  return out;
}

std::string strip_spaces(std::string s) {
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
  return s;
}

Result verdict_result(std::string kind, const Verdict& v, std::string rendering) {
  Result r;
  r.kind = std::move(kind);
  r.token = std::string(to_string(v.kind()));
  r.fields["verdict"] = r.token;
  r.fields[v.is_fails() ? "witness" : "checked_up_to"] = v.index();
  r.rendering = std::move(rendering);
  r.summary = r.token + " " + std::to_string(v.index());
  r.undecided = v.kind() == Verdict::Kind::Unknown;
  return r;
}

}  // namespace

Result error_result(std::string operation, std::string message) {
  Result r;
  r.kind = "error";
  r.fields["operation"] = operation;
  r.fields["message"] = message;
  r.token = "error";
  r.summary = "error in " + operation + ": " + message;
  return r;
}

std::string format_json(const Result& result, const Config& config) {
  nlohmann::ordered_json out;
  out["kind"] = result.kind;
  for (const auto& [key, value] : result.fields.items()) out[key] = value;
  if (result.kind == "error") return out.dump();
  out["rendering"] = result.rendering;
  out["config"] = {{"horizon", config.horizon}, {"tol", config.tol.str()}};
  return out.dump();
}

Quantity Executor::evaluate(const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Number: return embed_scalar(e.number);
    case Expr::Kind::BuiltinN:
    case Expr::Kind::Var: return natural_numbers();
    case Expr::Kind::Ident: {
      auto it = bindings_.find(e.name);
      if (it == bindings_.end()) throw Error(ErrorKind::InvalidArgument, "lookup", std::nullopt, "unbound name '" + e.name + "'");
      return it->second;
    }
    case Expr::Kind::Add: return guard_size(add(evaluate(*e.args[0]), evaluate(*e.args[1])), "add");
    case Expr::Kind::Sub: return guard_size(sub(evaluate(*e.args[0]), evaluate(*e.args[1])), "sub");
    case Expr::Kind::Mul: return guard_size(mul(evaluate(*e.args[0]), evaluate(*e.args[1])), "mul");
    case Expr::Kind::Neg: return neg(evaluate(*e.args[0]));
    case Expr::Kind::Pow:
      return power(evaluate(*e.args[0]), to_index(e.integer, -kMaxExponent, kMaxExponent, "pow"));
    case Expr::Kind::PowVar: {
      const Quantity base = evaluate(*e.args[0]);
      const auto& cf = base.closed_form("pow");
      const bool constant = cf.patch.empty() && cf.body.size() == 1 && cf.body.terms().begin()->first == TermKey{Rational(1), 0};
      if (!constant)
        throw Error(ErrorKind::InvalidArgument, "pow", std::nullopt, "the base of ^" + e.name + " must be a nonzero constant");
      return Quantity::closed(ExpPoly::monomial(Rational(1), 0, cf.body.constant_term()));
    }
    case Expr::Kind::Delay:
      return delay(evaluate(*e.args[0]), to_index(e.integer, 0, kMaxShift, "delay"));
    case Expr::Kind::Patch: {
      PrefixPatch overrides;
      for (const auto& [index, value] : e.overrides) overrides.set(to_index(index, 1, kMaxPatchIndex, "patch"), value);
      return patch(evaluate(*e.args[0]), overrides);
    }
    case Expr::Kind::Series: {
      const Quantity term = evaluate(*e.args[0]);
      return partial_sums(Series{term.body("series"), to_index(e.integer, 1, kMaxShift, "series")});
    }
    case Expr::Kind::Geom: return partial_sums(geometric_series(e.number));
  }
  throw Error(ErrorKind::InvalidArgument, "execute", std::nullopt, "unknown expression");
}

RealFunction Executor::resolve(const FnSpec& fn) const {
  if (fn.kind == FnSpec::Kind::Builtin) {
    if (auto f = functions::builtin(fn.name)) return *f;
    throw Error(ErrorKind::InvalidArgument, "lookup", std::nullopt, "unknown function '" + fn.name + "'");
  }
  ExprPtr body = fn.body;
  return RealFunction(fn.source, [body](const Rational& x) { return evaluate_scalar(*body, x); });
}

Result Executor::execute(const Statement& statement) {
  try {
    return run(statement);
  } catch (const Error& e) {
    return error_result(e.operation(), e.message());
  } catch (const SyntaxError& e) {
    return error_result("parse", e.what());
  } catch (const std::exception& e) {
    return error_result("execute", e.what());
  }
}

Result Executor::run(const Statement& s) {
  CalculusConfig calc{config_.horizon, config_.window, config_.tol};
  Result r;
  switch (s.kind) {
    case Statement::Kind::Let:
    case Statement::Kind::Eval: {
      const Quantity q = evaluate(*s.args[0]);
      r.kind = s.kind == Statement::Kind::Let ? "let" : "eval";
      r.rendering = q.render();
      if (s.kind == Statement::Kind::Let) {
        r.fields["name"] = s.name;
        bindings_.insert_or_assign(s.name, q);
        r.summary = s.name + " = " + r.rendering;
      } else {
        r.summary = r.rendering;
      }
      r.token = r.rendering;
      return r;
    }
    case Statement::Kind::Cmp:
    case Statement::Kind::InfGreater:
    case Statement::Kind::Close: {
      const Quantity a = evaluate(*s.args[0]);
      const Quantity b = evaluate(*s.args[1]);
      std::string name;
      if (s.kind == Statement::Kind::Cmp) {
        name = "cmp";
        r.token = std::string(to_string(compare(a, b)));
      } else if (s.kind == Statement::Kind::InfGreater) {
        name = "infgreater";
        r.token = yes_no(infinitely_greater(a, b));
      } else {
        name = "close";
        r.token = yes_no(infinitely_close(a, b));
      }
      r.kind = name;
      r.fields["verdict"] = r.token;
      r.rendering = name + "(" + a.render() + ", " + b.render() + ")";
      r.summary = r.token;
      return r;
    }
    case Statement::Kind::Classify: {
      const Quantity q = evaluate(*s.args[0]);
      const Classification c = classify(q);
      r.kind = "classify";
      r.token = std::string(to_string(c.kind()));
      r.fields["value"] = r.token;
      r.summary = r.token;
      if (c.standard_part()) {
        r.number = *c.standard_part();
        r.fields["standard_part"] = r.number->str();
        r.summary += " " + r.number->pretty();
      }
      r.rendering = q.render();
      return r;
    }
    case Statement::Kind::St: {
      const Quantity q = evaluate(*s.args[0]);
      r.kind = "st";
      r.number = standard_part(q);
      r.fields["value"] = r.number->str();
      r.token = r.summary = r.number->pretty();
      r.rendering = q.render();
      return r;
    }
    case Statement::Kind::Deriv: {
      const RealFunction f = resolve(*s.fn);
      const StEstimate est = derivative(f, s.point, reciprocal_n(), calc);
      r.kind = "deriv";
      r.number = est.value;
      r.fields["value"] = est.value.str();
      r.fields["spread"] = est.achieved_spread.str();
      r.fields["window"] = est.achieved_window;
      r.rendering = "deriv(" + s.fn->source + ", " + s.point.str() + ")";
      r.token = "estimate";
      r.summary = "estimate " + est.value.decimal(12) + " spread " + est.achieved_spread.decimal(12);
      return r;
    }
    case Statement::Kind::Cont: {
      const RealFunction f = resolve(*s.fn);
      const Verdict v = continuity_probe(f, s.point, default_continuity_probes(), calc);
      return verdict_result("cont", v, "cont(" + s.fn->source + ", " + s.point.str() + ")");
    }
    case Statement::Kind::UCont: {
      const RealFunction f = resolve(*s.fn);
      const Quantity a = evaluate(*s.args[0]);
      const Quantity b = evaluate(*s.args[1]);
      const Verdict v = uniform_continuity_probe(f, a, b, calc);
      return verdict_result("ucont", v, "ucont(" + s.fn->source + ", " + a.render() + ", " + b.render() + ")");
    }
    case Statement::Kind::Assert: return check_assertion(s);
  }
  throw Error(ErrorKind::InvalidArgument, "execute", std::nullopt, "unknown statement");
}

Result Executor::check_assertion(const Statement& s) {
  const Statement& inner = *s.inner;
  Result actual = run(inner);

  const auto within = [&](const Rational& value, const Rational& expected, const Rational& tol) {
    return (value - expected).abs() <= tol;
  };
  bool pass = false;
  if (actual.kind == "eval") {
    const Statement expected = parse(s.expected);
    if (expected.kind != Statement::Kind::Eval)
      throw Error(ErrorKind::InvalidArgument, "assert", std::nullopt, "expected a quantity");
    pass = compare(evaluate(*inner.args[0]), evaluate(*expected.args[0])) == Comparison::Equal;
  } else if (actual.kind == "st" || actual.kind == "deriv") {
    const Rational expected = Rational::parse(strip_spaces(s.expected));
    const Rational tol = s.tolerance.value_or(actual.kind == "st" ? Rational(0) : config_.tol);
    pass = within(*actual.number, expected, tol);
  } else {
    const std::string expected = normalize_space(s.expected);
    const auto space = expected.find(' ');
    pass = expected.substr(0, space) == actual.token;
    if (pass && space != std::string::npos) {
      const Rational value = Rational::parse(strip_spaces(expected.substr(space + 1)));
      pass = actual.number && within(*actual.number, value, s.tolerance.value_or(Rational(0)));
    }
  }
  if (actual.undecided) pass = false;

  Result r;
  r.kind = "assert";
  r.token = pass ? "pass" : "fail";
  r.fields["verdict"] = r.token;
  r.fields["expected"] = normalize_space(s.expected);
  r.fields["actual"] = actual.summary;
  r.rendering = actual.rendering;
  r.summary = pass ? "pass: " + actual.summary : "FAIL: expected " + normalize_space(s.expected) + ", got " + actual.summary;
  return r;
}

}  // namespace bolzano::cli
