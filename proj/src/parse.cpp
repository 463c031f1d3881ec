#include "leafcalc/parse.hpp"

#include <cctype>
#include <string>

#include "leafcalc/error.hpp"

namespace leafcalc {

namespace {

class ExprParser {
 public:
  ExprParser(const ChartSpec& chart, std::string_view text) : chart_(chart), text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in \"" + std::string(text_) + "\"", 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    skip_space();
    RatFunc acc(chart_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = power();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      if (pos_ - start > 3) fail("exponent too large");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      RatFunc r(chart_, 1);
      for (unsigned i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(chart_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'x' || c == 'y') {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int var = chart_.var_index(name);
      if (var < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "' for chart s=" + std::to_string(chart_.s()) +
             ", n=" + std::to_string(chart_.n()));
      }
      return RatFunc::variable(chart_, var);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const ChartSpec& chart_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const ChartSpec& chart, std::string_view text) {
  return ExprParser(chart, text).parse();
}

Poly parse_poly(const ChartSpec& chart, std::string_view text) {
  RatFunc f = parse_ratfunc(chart, text);
  if (!f.is_polynomial()) {
    throw ParseError("expected a polynomial in \"" + std::string(text) + "\"", 1, 1);
  }
  return f.numerator();
}

}  // namespace leafcalc
