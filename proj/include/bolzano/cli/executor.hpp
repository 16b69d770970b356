#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "bolzano/calculus.hpp"
#include "bolzano/cli/ast.hpp"

namespace bolzano::cli {

struct Config {
  Index horizon = 10'000;
  Rational tol = Rational::ten_to_minus(6);
  Index window = 50;
};

/// Outcome of one statement. `fields` holds the kind-specific JSON members
/// in output order; `token` and `number` are what assertions match against.
struct Result {
  std::string kind;
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  std::string rendering;
  std::string summary;
  std::string token;
  std::optional<Rational> number;
  /// Set on horizon-bounded answers that could not be decided.
  bool undecided = false;
};

Result error_result(std::string operation, std::string message);

/// Single-line JSON: kind, the kind's fields, rendering, config. Error
/// results carry only kind, operation and message.
std::string format_json(const Result& result, const Config& config);

/// Evaluates statements against a set of `let` bindings. Module errors are
/// returned as kind "error" results, never thrown.
class Executor {
 public:
  explicit Executor(Config config = {}) : config_(std::move(config)) {}

  Result execute(const Statement& statement);

  /// Quantity denoted by a qexpr; throws bolzano::Error on failure.
  Quantity evaluate(const Expr& expr) const;

  const Config& config() const noexcept { return config_; }
  const std::map<std::string, Quantity>& bindings() const noexcept { return bindings_; }

 private:
  Result run(const Statement& statement);
  Result check_assertion(const Statement& statement);
  RealFunction resolve(const FnSpec& fn) const;

  Config config_;
  std::map<std::string, Quantity> bindings_;
};

}  // namespace bolzano::cli
