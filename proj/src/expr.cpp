#include "acn/expr.hpp"

#include <cctype>
#include <sstream>

namespace acn::expr {

namespace {

struct Parser {
  TablePtr table;
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression error at position " + std::to_string(pos) + ": " + what +
                     " in \"" + std::string(text) + "\"");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Integer parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Integer(std::string(text.substr(start, pos - start)));
  }

  Scalar parse_expr() {
    bool neg = eat('-');
    Scalar acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        return acc;
    }
  }

  Scalar parse_term() {
    Scalar acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc *= parse_factor();
      } else if (eat('/')) {
        Scalar d = parse_factor();
        auto q = d.constant_value();
        if (!q) fail("division is only defined by rational constants");
        if (*q == 0) fail("division by zero");
        acc = acc.divided_by(*q);
      } else {
        return acc;
      }
    }
  }

  Scalar parse_factor() {
    Scalar base = parse_primary();
    if (eat('^')) {
      Integer e = parse_uint();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Scalar parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Scalar inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return -parse_primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar::constant(table, Rational(parse_uint()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      if (!table || !table->index_of(name)) fail("unknown symbol '" + name + "'");
      return Scalar::symbol(table, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

std::string monomial_str(const SymbolTable* table, const ExpVec& e, const Rational& abs_coeff) {
  std::ostringstream os;
  bool have_symbols = false;
  for (auto x : e)
    if (x != 0) have_symbols = true;
  if (!have_symbols || abs_coeff != 1) {
    os << rational_str(abs_coeff);
    if (have_symbols) os << '*';
  }
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << table->name(i);
    if (e[i] > 1) os << '^' << e[i];
  }
  return os.str();
}

} // namespace

Scalar parse(const TablePtr& table, std::string_view text) {
  Parser p{table, text};
  Scalar s = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << monomial_str(s.table().get(), e, a);
  }
  return os.str();
}

std::string to_string(const Fraction& f) {
  if (auto s = f.as_scalar()) return to_string(*s);
  return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

} // namespace acn::expr
