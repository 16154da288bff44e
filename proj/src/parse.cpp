#include "riordan/parse.hpp"

#include <cctype>

namespace riordan {

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    Poly num = parse_sum();
    skip_ws();
    Poly den{Rat(1)};
    if (!eof() && peek() == '/') {
      ++pos_;
      den = parse_sum();
    }
    skip_ws();
    if (!eof()) throw ParseError("unexpected character", pos_);
    if (den.coeff(0).is_zero())
      throw std::invalid_argument("parse_ratfunc: denominator has zero constant term");
    return RatFunc(std::move(num), std::move(den));
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Poly parse_monomial(const Rat& coeff) {
    // caller sits on 'x'
    ++pos_;
    long exp = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const Int e = parse_int();
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
      exp = e.get_si();
    }
    std::vector<Rat> c(static_cast<std::size_t>(exp) + 1, Rat(0));
    c.back() = coeff;
    return Poly(std::move(c));
  }

  Poly parse_primary() {
    skip_ws();
    if (eof()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = parse_sum();
      skip_ws();
      if (eof() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Rat value(parse_int());
      skip_ws();
      if (!eof() && peek() == 'x') return parse_monomial(value);
      return Poly{value};
    }
    if (c == 'x') return parse_monomial(Rat(1));
    throw ParseError("expected term", pos_);
  }

  Poly parse_product() {
    Poly acc = parse_primary();
    for (;;) {
      skip_ws();
      if (eof() || peek() != '*') break;
      ++pos_;
      acc = acc * parse_primary();
    }
    return acc;
  }

  Poly parse_sum() {
    skip_ws();
    bool negate = false;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = parse_product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (eof() || (peek() != '+' && peek() != '-')) break;
      const bool minus = peek() == '-';
      ++pos_;
      const Poly rhs = parse_product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rat c = p.coeff(i);
    if (c.is_zero()) continue;
    const bool negative = c < Rat(0);
    const Rat mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0) {
      out += mag.to_string();
    } else {
      if (mag != Rat(1)) out += mag.to_string() + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_string(const RatFunc& rf) {
  if (rf.den() == Poly{Rat(1)}) return to_string(rf.num());
  return "(" + to_string(rf.num()) + ")/(" + to_string(rf.den()) + ")";
}

}  // namespace riordan
