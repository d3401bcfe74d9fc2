#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "mpoly.hpp"

namespace ncplane {

// Recursive-descent parser for the polynomial expression grammar: integers,
// identifiers [a-zA-Z][a-zA-Z0-9]*, operators + - * ^ and parentheses.
// Implicit multiplication is not accepted.
class PolyParser {
 public:
  PolyParser(std::string text, const VarSet& vars) : s_(std::move(text)), vars_(vars) {}

  MPolyQ parse() {
    MPolyQ p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPolyQ expr() {
    MPolyQ p = eat('-') ? -term() : term();
    while (true) {
      if (eat('+')) {
        p = p + term();
      } else if (eat('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }
  MPolyQ term() {
    MPolyQ p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  MPolyQ factor() {
    MPolyQ b = base();
    if (eat('^')) {
      int e = integer_literal();
      if (e < 0) fail("negative exponent");
      return b.pow(e);
    }
    return b;
  }
  MPolyQ base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      MPolyQ p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MPolyQ::constant(Rational(BigInt(digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
        id += s_[pos_++];
      }
      int v = vars_.index_of(id);
      if (v < 0) fail("unknown variable '" + id + "'");
      return MPolyQ::variable(v);
    }
    fail("expected a number, variable or '('");
  }
  int integer_literal() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    int v = std::stoi(digits());
    return neg ? -v : v;
  }
  std::string digits() {
    skip_ws();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  std::string s_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

inline MPolyQ parse_poly(const std::string& text, const VarSet& vars = vars_z()) {
  return PolyParser(text, vars).parse();
}

// Clears denominators and the content so the poly prints inside the integer
// grammar; classification inputs and outputs are projective, so this is the
// canonical representative.  Sign is chosen to make the grlex-leading
// coefficient positive.
inline MPolyQ primitive_scale(const MPolyQ& p) {
  if (p.is_zero()) return p;
  BigInt l = 1;
  for (auto& [m, c] : p.terms()) l = boost::multiprecision::lcm(l, den(c));
  BigInt g = 0;
  for (auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, num(c * Rational(l)));
  Rational scale = Rational(l, g);
  if (p.lead().second < 0) scale = -scale;
  return scale * p;
}

// Deterministic printer emitting the same grammar the parser accepts.
inline std::string print_poly(const MPolyQ& p, const VarSet& vars = vars_z()) {
  return primitive_scale(p).to_string(vars);
}

}  // namespace ncplane
