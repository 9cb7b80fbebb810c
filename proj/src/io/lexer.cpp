#include "inns/io/lexer.hpp"

#include <cctype>

namespace inns::io {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      bare_(message),
      line_(line),
      column_(column) {}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int l = line;
    const int cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({TokenKind::Identifier, text.substr(i, j - i), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Integer, text.substr(i, j - i), l, cc});
      advance(j - i);
      continue;
    }
    static const std::string symbols = "+-*^/()=,;:{}|";
    if (symbols.find(c) == std::string::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({TokenKind::Symbol, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < toks_.size() ? toks_[k] : toks_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

bool TokenStream::is_symbol(const std::string& s) const {
  return peek().kind == TokenKind::Symbol && peek().text == s;
}

bool TokenStream::is_word(const std::string& s) const {
  return peek().kind == TokenKind::Identifier && peek().text == s;
}

bool TokenStream::accept_symbol(const std::string& s) {
  if (!is_symbol(s)) return false;
  next();
  return true;
}

bool TokenStream::accept_word(const std::string& s) {
  if (!is_word(s)) return false;
  next();
  return true;
}

const Token& TokenStream::expect_symbol(const std::string& s) {
  if (!is_symbol(s)) fail("expected '" + s + "'");
  return next();
}

const Token& TokenStream::expect_word(const std::string& s) {
  if (!is_word(s)) fail("expected '" + s + "'");
  return next();
}

const Token& TokenStream::expect_identifier(const std::string& what) {
  if (peek().kind != TokenKind::Identifier) fail("expected " + what);
  return next();
}

long long TokenStream::expect_integer(const std::string& what) {
  if (peek().kind != TokenKind::Integer) fail("expected " + what);
  const Token& t = next();
  try {
    return std::stoll(t.text);
  } catch (const std::out_of_range&) {
    fail_at(t, "integer out of range");
  }
}

void TokenStream::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenStream::fail_at(const Token& t, const std::string& message) const {
  std::string where = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(message + " at " + where, t.line, t.column);
}

}  // namespace inns::io
