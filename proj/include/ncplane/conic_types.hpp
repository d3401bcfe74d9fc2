#pragma once

#include <stdexcept>
#include <string>

namespace ncplane {

// The six isomorphism types of a conic-against-discriminant configuration.
enum class ConicTypeLabel { T1, T2a, T2b, T3a, T3b, T4 };

inline std::string to_string(ConicTypeLabel t) {
  switch (t) {
    case ConicTypeLabel::T1: return "1";
    case ConicTypeLabel::T2a: return "2a";
    case ConicTypeLabel::T2b: return "2b";
    case ConicTypeLabel::T3a: return "3a";
    case ConicTypeLabel::T3b: return "3b";
    case ConicTypeLabel::T4: return "4";
  }
  throw std::logic_error("unreachable");
}

inline ConicTypeLabel conic_type_from_string(const std::string& s) {
  if (s == "1") return ConicTypeLabel::T1;
  if (s == "2a") return ConicTypeLabel::T2a;
  if (s == "2b") return ConicTypeLabel::T2b;
  if (s == "3a") return ConicTypeLabel::T3a;
  if (s == "3b") return ConicTypeLabel::T3b;
  if (s == "4") return ConicTypeLabel::T4;
  throw std::invalid_argument("unknown conic type '" + s + "'");
}

}  // namespace ncplane
