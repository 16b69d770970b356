#pragma once

#include <iosfwd>
#include <string_view>

#include "bolzano/cli/executor.hpp"

namespace bolzano::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitEvalError = 2,
  kExitAssertionFailed = 3,
};

/// Line-oriented front end shared by the REPL and batch mode. Blank lines
/// and `#` comments are skipped.
class Session {
 public:
  explicit Session(Config config = {}, bool json = false) : executor_(std::move(config)), json_(json) {}

  /// Parses and executes one statement; syntax errors become error results.
  Result run_line(std::string_view line, int line_number = 1);

  /// Parses every statement first (any syntax error exits 1), then runs
  /// them in order. An evaluation error stops the run with exit 2; failed
  /// assertions are reported and give exit 3 at the end.
  int run_batch(std::istream& in, std::ostream& out);

  void repl(std::istream& in, std::ostream& out);

  std::string render(const Result& result) const;
  Executor& executor() noexcept { return executor_; }

 private:
  Executor executor_;
  bool json_;
};

}  // namespace bolzano::cli
