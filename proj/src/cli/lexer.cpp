#include <cctype>

#include "bolzano/cli/parser.hpp"

namespace bolzano::cli {

std::string_view describe(Token::Kind kind) {
  switch (kind) {
    case Token::Kind::Int: return "integer";
    case Token::Kind::Decimal: return "decimal";
    case Token::Kind::Ident: return "identifier";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::LBrace: return "'{'";
    case Token::Kind::RBrace: return "'}'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::Colon: return "':'";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::Caret: return "'^'";
    case Token::Kind::Assign: return "'='";
    case Token::Kind::EqEq: return "'=='";
    case Token::Kind::Arrow: return "'->'";
    case Token::Kind::Tilde: return "'~'";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : std::runtime_error("SyntaxError at " + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                         ": expected " + join_expected(expected) + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::vector<Token> tokenize(std::string_view text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto at = [&](std::size_t j) { return j < text.size() ? text[j] : '\0'; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token tok;
    tok.pos = SourcePos{line, static_cast<int>(i) + 1};
    tok.offset = i;
    const std::size_t begin = i;
    if (is_digit(c)) {
      while (is_digit(at(i))) ++i;
      tok.kind = Token::Kind::Int;
      if (at(i) == '.' && is_digit(at(i + 1))) {
        ++i;
        while (is_digit(at(i))) ++i;
        tok.kind = Token::Kind::Decimal;
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (is_ident(at(i))) ++i;
      tok.kind = Token::Kind::Ident;
    } else {
      ++i;
      switch (c) {
        case '(': tok.kind = Token::Kind::LParen; break;
        case ')': tok.kind = Token::Kind::RParen; break;
        case '{': tok.kind = Token::Kind::LBrace; break;
        case '}': tok.kind = Token::Kind::RBrace; break;
        case ',': tok.kind = Token::Kind::Comma; break;
        case ':': tok.kind = Token::Kind::Colon; break;
        case '+': tok.kind = Token::Kind::Plus; break;
        case '*': tok.kind = Token::Kind::Star; break;
        case '/': tok.kind = Token::Kind::Slash; break;
        case '^': tok.kind = Token::Kind::Caret; break;
        case '~': tok.kind = Token::Kind::Tilde; break;
        case '-':
          tok.kind = Token::Kind::Minus;
          if (at(i) == '>') {
            tok.kind = Token::Kind::Arrow;
            ++i;
          }
          break;
        case '=':
          tok.kind = Token::Kind::Assign;
          if (at(i) == '=') {
            tok.kind = Token::Kind::EqEq;
            ++i;
          }
          break;
        default:
          throw SyntaxError(tok.pos, {"a token"}, "'" + std::string(1, c) + "'");
      }
    }
    tok.text = std::string(text.substr(begin, i - begin));
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.offset = i;
  end.pos = SourcePos{line, static_cast<int>(i) + 1};
  out.push_back(end);
  return out;
}

}  // namespace bolzano::cli
