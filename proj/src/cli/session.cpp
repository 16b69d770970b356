#include "bolzano/cli/session.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "bolzano/cli/parser.hpp"

namespace bolzano::cli {

namespace {

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string Session::render(const Result& result) const {
  if (json_) return format_json(result, executor_.config());
  return result.summary;
}

Result Session::run_line(std::string_view line, int line_number) {
  try {
    return executor_.execute(parse(line, line_number));
  } catch (const SyntaxError& e) {
    return error_result("parse", e.what());
  }
}

int Session::run_batch(std::istream& in, std::ostream& out) {
  std::vector<Statement> program;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    try {
      program.push_back(parse(line, line_number));
    } catch (const SyntaxError& e) {
      out << render(error_result("parse", e.what())) << '\n';
      return kExitParseError;
    }
  }

  int status = kExitOk;
  for (const auto& statement : program) {
    const Result r = executor_.execute(statement);
    out << render(r) << '\n';
    if (r.kind == "error") return kExitEvalError;
    if (r.kind == "assert" && r.token != "pass") status = kExitAssertionFailed;
  }
  return status;
}

void Session::repl(std::istream& in, std::ostream& out) {
  std::string line;
  int line_number = 0;
  while (true) {
    if (!json_) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    ++line_number;
    if (line == "quit" || line == "exit") break;
    if (is_blank(line)) continue;
    out << render(run_line(line, line_number)) << '\n';
  }
}

}  // namespace bolzano::cli
