#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bolzano/cli/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on infinite quantities modulo the Frechet filter"};

  bolzano::Index horizon = 10'000;
  bolzano::Index window = 50;
  std::string tol = "1/1000000";
  bool json = false;
  std::string batch;
  std::vector<std::string> statements;

  app.add_option("--horizon", horizon, "Largest index inspected by horizon-bounded checks")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "Tolerance as a rational or decimal literal");
  app.add_option("--window", window, "Tail window size for estimates")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "Emit one JSON object per statement");
  app.add_option("--batch", batch, "Run statements from FILE; exit code reflects errors and assertions");
  app.add_option("-e,--eval", statements, "Run a statement (repeatable) instead of starting the REPL");

  CLI11_PARSE(app, argc, argv);

  bolzano::cli::Config config;
  config.horizon = horizon;
  config.window = window;
  try {
    config.tol = bolzano::Rational::parse(tol);
  } catch (const std::exception& e) {
    std::cerr << "invalid --tol: " << e.what() << '\n';
    return bolzano::cli::kExitParseError;
  }

  bolzano::cli::Session session(config, json);
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) {
      std::cerr << "cannot open " << batch << '\n';
      return bolzano::cli::kExitEvalError;
    }
    return session.run_batch(in, std::cout);
  }
  if (!statements.empty()) {
    std::string joined;
    for (const auto& s : statements) joined += s + '\n';
    std::istringstream in(joined);
    return session.run_batch(in, std::cout);
  }
  session.repl(std::cin, std::cout);
  return bolzano::cli::kExitOk;
}
