#pragma once

#include <array>
#include <stdexcept>

#include "mpoly.hpp"

namespace ncplane {

// Parametrization (s : t) -> P(s, t) of the line V(f) for a nonzero linear
// form f: the last variable with nonzero coefficient is solved for, the
// remaining two become s and t in index order.  Deterministic, so pencil and
// profile computations refer to the same parameter points.
inline std::array<MPolyQ, 3> parametrize_line(const MPolyQ& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 1)
    throw std::invalid_argument("expected a nonzero linear form");
  std::array<Rational, 3> a{};
  for (auto& [m, c] : f.terms())
    for (int v = 0; v < 3; ++v)
      if (m[v] == 1) a[v] = c;
  int pivot = -1;
  for (int v = 2; v >= 0; --v)
    if (a[v] != 0) {
      pivot = v;
      break;
    }
  std::array<int, 2> free{};
  int k = 0;
  for (int v = 0; v < 3; ++v)
    if (v != pivot) free[k++] = v;
  std::array<MPolyQ, 3> out;
  MPolyQ s = MPolyQ::variable(0), t = MPolyQ::variable(1);
  out[free[0]] = s;
  out[free[1]] = t;
  out[pivot] = (-a[free[0]] / a[pivot]) * s + (-a[free[1]] / a[pivot]) * t;
  return out;
}

// The two basis points P(1,0), P(0,1) of the parametrized line.
inline std::array<std::array<Rational, 3>, 2> line_basis_points(const MPolyQ& f) {
  auto pr = parametrize_line(f);
  std::array<std::array<Rational, 3>, 2> out{};
  for (int i = 0; i < 3; ++i) {
    out[0][i] = pr[i].eval({Rational(1), Rational(0), Rational(0)});
    out[1][i] = pr[i].eval({Rational(0), Rational(1), Rational(0)});
  }
  return out;
}

}  // namespace ncplane
