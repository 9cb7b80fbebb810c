#include "inns/io/expression.hpp"

namespace inns::io {

using kernel::Polynomial;
using kernel::Rational;
using kernel::RingPtr;

namespace {

Polynomial parse_expr(TokenStream& ts, const RingPtr& ring);

Rational integer_literal(TokenStream& ts) {
  const Token& t = ts.next();
  return Rational(mpz_class(t.text));
}

Polynomial parse_atom(TokenStream& ts, const RingPtr& ring) {
  const Token& t = ts.peek();
  if (t.kind == TokenKind::Integer) {
    Rational q = integer_literal(ts);
    if (ts.accept_symbol("/")) {
      if (ts.peek().kind != TokenKind::Integer) ts.fail("expected integer denominator");
      const Token& dt = ts.peek();
      Rational d = integer_literal(ts);
      if (d == 0) ts.fail_at(dt, "division by zero");
      q /= d;
    }
    return Polynomial::constant(ring, q);
  }
  if (t.kind == TokenKind::Identifier) {
    auto idx = ring->index_of(t.text);
    if (!idx) ts.fail("unknown variable '" + t.text + "'");
    ts.next();
    return Polynomial::variable(ring, *idx);
  }
  if (ts.accept_symbol("(")) {
    Polynomial p = parse_expr(ts, ring);
    ts.expect_symbol(")");
    return p;
  }
  if (ts.accept_symbol("-")) return -parse_atom(ts, ring);
  ts.fail("expected a number, variable or '('");
}

Polynomial parse_power(TokenStream& ts, const RingPtr& ring) {
  Polynomial base = parse_atom(ts, ring);
  if (ts.accept_symbol("^")) {
    long long e = ts.expect_integer("exponent");
    if (e > 1000) ts.fail("exponent too large");
    return kernel::pow(base, static_cast<unsigned>(e));
  }
  return base;
}

Polynomial parse_term(TokenStream& ts, const RingPtr& ring) {
  Polynomial p = parse_power(ts, ring);
  while (ts.accept_symbol("*")) p = p * parse_power(ts, ring);
  return p;
}

Polynomial parse_expr(TokenStream& ts, const RingPtr& ring) {
  bool negate = false;
  if (ts.accept_symbol("-")) {
    negate = true;
  } else {
    ts.accept_symbol("+");
  }
  Polynomial p = parse_term(ts, ring);
  if (negate) p = -p;
  while (true) {
    if (ts.accept_symbol("+")) {
      p += parse_term(ts, ring);
    } else if (ts.accept_symbol("-")) {
      p -= parse_term(ts, ring);
    } else {
      break;
    }
  }
  if (p.is_zero()) return Polynomial(ring);
  return p;
}

}  // namespace

Polynomial parse_polynomial(TokenStream& ts, const RingPtr& ring) { return parse_expr(ts, ring); }

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  TokenStream ts(tokenize(text));
  Polynomial p = parse_expr(ts, ring);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return p;
}

Rational parse_rational(TokenStream& ts) {
  bool neg = ts.accept_symbol("-");
  if (ts.peek().kind != TokenKind::Integer) ts.fail("expected a rational number");
  Rational q = integer_literal(ts);
  if (ts.accept_symbol("/")) {
    if (ts.peek().kind != TokenKind::Integer) ts.fail("expected integer denominator");
    const Token& dt = ts.peek();
    Rational d = integer_literal(ts);
    if (d == 0) ts.fail_at(dt, "division by zero");
    q /= d;
  }
  return neg ? Rational(-q) : q;
}

Rational parse_rational(const std::string& text) {
  TokenStream ts(tokenize(text));
  Rational q = parse_rational(ts);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return q;
}

}  // namespace inns::io
