#ifndef INNS_IO_EXPRESSION_HPP
#define INNS_IO_EXPRESSION_HPP

#include <string>

#include "inns/io/lexer.hpp"
#include "inns/kernel/polynomial.hpp"

namespace inns::io {

/// Grammar:
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := power ('*' power)*
///   power  := atom ['^' integer]
///   atom   := integer ['/' integer] | variable | '(' expr ')' | '-' atom
/// Multiplication must be written explicitly.
kernel::Polynomial parse_polynomial(TokenStream& ts, const kernel::RingPtr& ring);

/// Parses a whole string; trailing tokens are an error.
kernel::Polynomial parse_polynomial(const std::string& text, const kernel::RingPtr& ring);

/// Rational literal: ['-'] integer ['/' integer].
kernel::Rational parse_rational(TokenStream& ts);
kernel::Rational parse_rational(const std::string& text);

}  // namespace inns::io

#endif  // INNS_IO_EXPRESSION_HPP
