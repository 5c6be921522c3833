#include "preper/algebra/parser.hpp"

#include <algorithm>
#include <cctype>

namespace preper {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (accept('+')) {
        r = r + term();
      } else if (accept('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (accept('*')) {
        r = r * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFunc d = unary();
        if (d.num.is_zero()) throw ParseError("division by zero", at);
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    skip();
    std::size_t at = pos_;
    bool neg = accept('-');
    skip();
    std::string digits = read_digits();
    if (digits.empty()) throw ParseError("expected integer exponent", at);
    if (digits.size() > 6) throw ParseError("exponent too large", at);
    int e = std::stoi(digits);
    if (neg && base.num.is_zero()) throw ParseError("zero to a negative power", at);
    return pow(base, neg ? -e : e);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v(read_digits());
      return RatFunc(MPoly(Rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return RatFunc(MPoly::variable(static_cast<std::size_t>(it - vars_.begin())));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  RatFunc r = parse_expression(text, variables);
  if (r.is_polynomial()) return r.as_polynomial();
  if (auto q = exact_quotient(r.num, r.den)) return *q;
  throw ParseError("expected a polynomial", 0);
}

}  // namespace preper
