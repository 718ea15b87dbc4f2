#include <cctype>

#include "liebw/errors.hpp"
#include "liebw/poly.hpp"

namespace liebw {

namespace {

// expr  := term (('+'|'-') term)*
// term  := unary (('*'|'/') unary)*
// unary := ('+'|'-') unary | power
// power := atom ('^' ['-'] digits)?
// atom  := digits | name | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    PolyExpr p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyExpr expr() {
    PolyExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  PolyExpr term() {
    PolyExpr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        PolyExpr d = unary();
        if (d.is_zero()) fail("division by zero");
        if (!d.is_unit()) fail("division by a non-monomial");
        acc *= d.inverse();
      } else {
        return acc;
      }
    }
  }

  PolyExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PolyExpr power() {
    PolyExpr base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (negative) e = -e;
    if (e < 0 && !base.is_unit()) fail("negative power of a non-monomial");
    return base.pow(e);
  }

  PolyExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return PolyExpr(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return PolyExpr::param(text_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr PolyExpr::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace liebw
