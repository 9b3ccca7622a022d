#include <holo/ore.hpp>

#include <cctype>
#include <istream>
#include <stdexcept>

namespace holo {

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// recursive-descent parser over +,-,*,/,^ with atoms: integer, algebra
// variable, shift symbol, parenthesized expression; products are evaluated
// left to right with the noncommutative operator product
class OperatorParser {
 public:
  OperatorParser(const std::string& text, const OreAlgebra& alg)
      : s_(text), alg_(alg) {}

  OreOperator parse() {
    skip_ws();
    if (eof()) return OreOperator(alg_);  // empty input is the zero operator
    OreOperator r = expr();
    skip_ws();
    if (!eof()) fail("trailing input");
    return r;
  }

 private:
  OreOperator expr() {
    OreOperator r = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        r += term();
      } else if (peek() == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  OreOperator term() {
    OreOperator r = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        r *= factor();
      } else if (peek() == '/') {
        ++pos_;
        OreOperator d = factor();
        r = divide(r, d);
      } else {
        return r;
      }
    }
  }

  OreOperator factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    OreOperator base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long e = integer();
      if (e < 0) fail("negative shift powers unsupported");
      base = power(base, e);
    }
    return neg ? -base : base;
  }

  OreOperator atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      OreOperator r = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = integer();
      return OreOperator::coefficient(alg_, RatFun::constant(alg_.vars, Rat(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += s_[pos_++];
      int si = alg_.symbol_index(name);
      if (si >= 0) return OreOperator::shift(alg_, static_cast<std::size_t>(si));
      for (const std::string& v : alg_.vars)
        if (v == name)
          return OreOperator::coefficient(alg_, RatFun::variable(alg_.vars, name));
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character");
    return OreOperator(alg_);  // unreachable
  }

  OreOperator power(const OreOperator& b, long e) {
    OreOperator r = OreOperator::coefficient(alg_, RatFun::constant(alg_.vars, 1));
    for (long i = 0; i < e; ++i) r *= b;
    return r;
  }

  OreOperator divide(const OreOperator& a, const OreOperator& b) {
    // division only by pure coefficients
    RatFun d = RatFun::constant(alg_.vars, 0);
    bool coeff_only = true;
    for (const auto& [m, c] : b.terms()) {
      if (mono_total_degree(m) != 0) { coeff_only = false; break; }
      d = c;
    }
    if (!coeff_only) fail("division by an operator with shift symbols");
    if (d.is_zero()) fail("division by zero");
    return a.scaled(d.inv());
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eof() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("operator parse error at column " + std::to_string(pos_ + 1) +
                     ": " + why);
  }

  const std::string& s_;
  const OreAlgebra& alg_;
  std::size_t pos_ = 0;
};

}  // namespace

OreOperator parse_operator(const std::string& text, const OreAlgebra& alg) {
  return OperatorParser(text, alg).parse();
}

std::vector<OreOperator> parse_operator_list(std::istream& in, const OreAlgebra& alg) {
  std::vector<OreOperator> ops;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    try {
      ops.push_back(parse_operator(line, alg));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return ops;
}

}  // namespace holo
