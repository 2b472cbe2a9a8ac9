#include "emf/parser.hpp"

#include <cctype>
#include <sstream>

namespace emf {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  char get() {
    skip_ws();
    return pos < s.size() ? s[pos++] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at position " << pos << " in \"" << s << "\": " << msg;
    throw parse_error(os.str());
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }
};

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : lex_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    if (lex_.peek() != '\0') lex_.fail("unexpected trailing input");
    return p;
  }

 private:
  Poly expr() {
    Poly p = (lex_.peek() == '-') ? (lex_.get(), -term()) : term();
    for (;;) {
      char c = lex_.peek();
      if (c == '+') {
        lex_.get();
        p += term();
      } else if (c == '-') {
        lex_.get();
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      char c = lex_.peek();
      if (c == '*') {
        lex_.get();
        p = p * factor();
      } else if (c == '/') {
        lex_.get();
        Poly d = factor();
        if (!d.is_constant()) lex_.fail("division only by constants");
        Scalar c0 = d.constant_term();
        if (c0.is_zero()) lex_.fail("division by zero");
        p = p * c0.inverse();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    if (lex_.peek() == '-') {
      lex_.get();
      return -factor();
    }
    Poly base = primary();
    if (lex_.peek() == '^') {
      lex_.get();
      mpz_class e = lex_.integer();
      if (e < 0 || e >= 32768) lex_.fail("exponent out of range [0, 2^15)");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.get();
      Poly p = expr();
      if (lex_.get() != ')') lex_.fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = lex_.integer();
      return Poly::constant(ring_, Scalar::from_rational(ring_->field, Rational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex_.ident();
      int idx = ring_->var_index(name);
      if (idx >= 0) return Poly::variable(ring_, static_cast<size_t>(idx));
      if (name == "z")
        return Poly::constant(ring_, Scalar::zeta_power(ring_->field, 1));
      lex_.fail("unknown variable '" + name + "'");
    }
    lex_.fail("expected a number, variable, or '('");
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
  auto ring = std::make_shared<PolyRing>(field, std::vector<std::string>{});
  Poly p = parse_poly(text, ring);
  return p.constant_term();
}

}  // namespace emf
