#include <cctype>
#include <string>

#include "ncreal/expr.hpp"

namespace ncreal {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr parse_expr() {
    Expr acc = parse_term();
    for (;;) {
      if (accept("+")) {
        acc = acc + parse_term();
      } else if (accept("-")) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    while (accept("*")) acc = acc * parse_factor();
    return acc;
  }

  Expr parse_factor() {
    if (accept("-")) return -parse_factor();
    Expr e = parse_atom();
    while (accept("^")) {
      if (!accept("-1")) fail("only the exponent -1 is supported");
      e = Expr::inv(e);
    }
    return e;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      return Expr::constant(Rational::parse(num));
    }
    if (ch == 'z') {
      ++pos_;
      const std::string idx = digits();
      if (idx.empty()) fail("expected letter index after 'z'");
      if (idx.size() > 6 || std::stoi(idx) < 1) fail("letter index out of range");
      return Expr::var(std::stoi(idx));
    }
    if (accept("inv")) {
      expect('(');
      Expr e = parse_expr();
      expect(')');
      return Expr::inv(e);
    }
    if (accept("(")) {
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace ncreal
