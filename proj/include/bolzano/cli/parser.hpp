#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bolzano/cli/ast.hpp"

namespace bolzano::cli {

struct Token {
  enum class Kind {
    Int, Decimal, Ident,
    LParen, RParen, LBrace, RBrace, Comma, Colon,
    Plus, Minus, Star, Slash, Caret, Assign, EqEq, Arrow, Tilde,
    End,
  };

  Kind kind = Kind::End;
  std::string text;
  SourcePos pos;
  std::size_t offset = 0;  // byte offset into the statement text
};

std::string_view describe(Token::Kind kind);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourcePos pos, std::vector<std::string> expected, std::string found);

  SourcePos pos() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Splits one statement into tokens; `line` is used for positions only.
std::vector<Token> tokenize(std::string_view text, int line = 1);

/// Parses a single statement. Throws SyntaxError with the 1-based position
/// of the offending token and the set of tokens that would have been
/// accepted there.
Statement parse(std::string_view text, int line = 1);

}  // namespace bolzano::cli
