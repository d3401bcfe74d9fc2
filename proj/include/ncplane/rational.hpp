#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ncplane {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational '" + s + "'");
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) -> BigInt {
    if (part.empty()) throw bad();
    std::size_t i = 0;
    bool neg = false;
    if (part[0] == '+' || part[0] == '-') {
      neg = part[0] == '-';
      i = 1;
    }
    if (i == part.size()) throw bad();
    BigInt v = 0;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw bad();
      v = v * 10 + (part[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt p = parse_int(s.substr(0, slash));
  BigInt q = parse_int(s.substr(slash + 1));
  if (q == 0) throw bad();
  return Rational(p, q);
}

inline std::string rational_to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

}  // namespace ncplane
