#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace proc {

struct Outcome {
  int exit_code = -1;
  bool crashed = false;
  std::string out;
};

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

inline Outcome run(const std::string& args) {
  Outcome o;
  const std::string cmd = std::string(BOLZANO_TOOL) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) o.exit_code = WEXITSTATUS(status);
  else o.crashed = true;
  return o;
}

inline Outcome run_script(const std::string& script, const std::string& flags = "") {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("bolzano_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".bolz");
  { std::ofstream(path) << script; }
  Outcome o = run(flags + " --batch " + quote(path.string()));
  std::filesystem::remove(path);
  return o;
}

inline std::string fuzz_qexpr(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> leaves{"N", "n", "1", "-2", "3/4", "0", "0.5", "N^-1", "(-1)^n",
                                               "2^n", "1/2^n", "geom(1/2)", "series(k)", "series(k^2) from 3"};
  std::uniform_int_distribution<int> choice(0, depth > 3 ? 0 : 7);
  auto sub = [&] { return fuzz_qexpr(rng, depth + 1); };
  switch (choice(rng)) {
    case 1: return sub() + " + " + sub();
    case 2: return sub() + " - " + sub();
    case 3: return "(" + sub() + ") * (" + sub() + ")";
    case 4: return "(" + sub() + ")^" + std::to_string(std::uniform_int_distribution<int>(-2, 4)(rng));
    case 5: return "delay(" + sub() + ", " + std::to_string(std::uniform_int_distribution<int>(0, 5)(rng)) + ")";
    case 6: return "patch(" + sub() + ", {2: 1/3})";
    case 7: return "-" + sub();
    default: return leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
  }
}

// Grammar-guided statements, occasionally truncated, and raw token soup
// drawn from the statement vocabulary plus some junk.
inline std::string fuzz_structured(std::mt19937_64& rng) {
  static const std::vector<std::string> unary{"classify(", "st(", ""};
  static const std::vector<std::string> binary{"cmp(", "infgreater(", "close("};
  static const std::vector<std::string> fns{"sin", "abs", "step", "log", "sqrt", "x -> x*x - 1"};
  std::uniform_int_distribution<int> shape(0, 4);
  auto pick = [&](const std::vector<std::string>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  std::string s;
  switch (shape(rng)) {
    case 0: s = pick(binary) + fuzz_qexpr(rng, 0) + ", " + fuzz_qexpr(rng, 0) + ")"; break;
    case 1: {
      const std::string op = pick(unary);
      s = op + fuzz_qexpr(rng, 0) + (op.empty() ? "" : ")");
      break;
    }
    case 2: s = std::string(rng() % 2 ? "deriv(" : "cont(") + pick(fns) + ", " + (rng() % 2 ? "0" : "1/3") + ")"; break;
    case 3: s = "ucont(" + pick(fns) + ", N, N + n^-1)"; break;
    default: s = "let r = " + fuzz_qexpr(rng, 0); break;
  }
  if (rng() % 4 == 0) s.resize(rng() % (s.size() + 1));
  return s;
}

// Random token soup drawn from the statement vocabulary plus some junk.
inline std::string fuzz_statement(std::mt19937_64& rng) {
  if (rng() % 2 == 0) return fuzz_structured(rng);
  static const std::vector<std::string> vocab{
      "N", "n", "k", "x", "(", ")", "{", "}", ",", ":", "+", "-", "*", "/", "^", "=", "==", "->", "~",
      "0", "1", "2", "7", "-3", "1/2", "0.25", "100000000000000000000", "9999", "cmp(", "classify(",
      "st(", "infgreater(", "close(", "deriv(", "cont(", "ucont(", "let", "assert", "delay(", "series(",
      "geom(", "patch(", "from", "sin", "abs", "step", "log", "equal", "less", "r", "$", "\"", ";"};
  std::uniform_int_distribution<std::size_t> len(1, 12), pick(0, vocab.size() - 1);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i) s += vocab[pick(rng)] + " ";
  return s;
}

}  // namespace proc
