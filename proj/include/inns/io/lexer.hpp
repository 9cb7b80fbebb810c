#ifndef INNS_IO_LEXER_HPP
#define INNS_IO_LEXER_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace inns::io {

/// Input error carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& bare_message() const { return bare_; }

 private:
  std::string bare_;
  int line_;
  int column_;
};

enum class TokenKind { Identifier, Integer, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

/// Splits text into identifiers, unsigned integers and single-character
/// symbols. '//' and '#' start comments running to the end of the line.
std::vector<Token> tokenize(const std::string& text);

/// Cursor over a token vector with expectation helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is_symbol(const std::string& s) const;
  bool is_word(const std::string& s) const;
  bool accept_symbol(const std::string& s);
  bool accept_word(const std::string& s);
  const Token& expect_symbol(const std::string& s);
  const Token& expect_word(const std::string& s);
  const Token& expect_identifier(const std::string& what);
  long long expect_integer(const std::string& what);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace inns::io

#endif  // INNS_IO_LEXER_HPP
