#include <biham/errors.hpp>
#include <biham/parse.hpp>

#include <algorithm>
#include <cctype>
#include <string>

namespace biham {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  RationalFunction run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    RationalFunction r = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    skip();
    bool negative = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) fail("zero to a negative power");
    return base.pow(negative ? -e : e);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Poly::constant(ring_, Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = ring_ ? std::find(ring_->begin(), ring_->end(), name) : std::vector<std::string>::const_iterator{};
      if (!ring_ || it == ring_->end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return RationalFunction(Poly::variable(ring_, static_cast<std::size_t>(it - ring_->begin())));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

Poly parse_poly(std::string_view text, const Ring& ring) {
  RationalFunction r = parse_expression(text, ring);
  if (!r.is_polynomial())
    throw Error(ErrorKind::Parse, "expected a polynomial, got '" + r.to_string() + "'");
  Poly p = (Rational(1) / r.denominator().constant_term()) * r.numerator();
  return p + Poly::constant(ring, 0);
}

}  // namespace biham
