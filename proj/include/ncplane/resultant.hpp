#pragma once

#include <stdexcept>
#include <vector>

#include "mpoly.hpp"

namespace ncplane {

// Determinant by fraction-free Bareiss elimination; entries must live in an
// integral domain with exact division.
template <class K>
MPoly<K> mpoly_determinant(std::vector<std::vector<MPoly<K>>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly<K>::constant(K(1));
  MPoly<K> prev = MPoly<K>::constant(K(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MPoly<K>();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
      m[i][k] = MPoly<K>();
    }
    prev = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Sylvester resultant of f and g with respect to `var`; the result no longer
// involves `var`.  Vanishes identically iff f and g share a factor involving
// `var` (given nonvanishing leading data, which holds for forms).
template <class K>
MPoly<K> resultant(const MPoly<K>& f, const MPoly<K>& g, int var) {
  int df = f.degree_in(var);
  int dg = g.degree_in(var);
  if (df <= 0 && dg <= 0) throw std::invalid_argument("no eliminable variable");
  if (f.is_zero() || g.is_zero()) return MPoly<K>();
  if (df <= 0) return f.pow(dg);
  if (dg <= 0) return g.pow(df);
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const int n = df + dg;
  std::vector<std::vector<MPoly<K>>> m(n, std::vector<MPoly<K>>(n));
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) m[r][r + df - i] = fc[i];
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i) m[dg + r][r + dg - i] = gc[i];
  return mpoly_determinant(std::move(m));
}

// --- multivariate gcd (small bivariate / homogeneous ternary cases) ---------

namespace detail {

// gcd in Q[x, y] where x is variable `xv` and y is variable `yv`, computed by
// a primitive pseudo-remainder sequence over Q[y].
inline MPolyQ bivariate_gcd(const MPolyQ& f, const MPolyQ& g, int xv, int yv) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  auto upoly_in_y = [&](const MPolyQ& p) { return p.as_univariate(yv); };
  auto content = [&](const MPolyQ& p) -> UPolyQ {
    UPolyQ c;
    for (const auto& coef : p.coefficients_in(xv)) {
      if (coef.is_zero()) continue;
      c = gcd(c, upoly_in_y(coef));
      if (c.deg() == 0) break;
    }
    return c.is_zero() ? UPolyQ::constant(Rational(1)) : c.monic();
  };
  auto divide_content = [&](const MPolyQ& p, const UPolyQ& c) {
    return exact_divide(p, MPolyQ::from_univariate(c, yv));
  };
  MPolyQ a = f, b = g;
  if (a.degree_in(xv) < b.degree_in(xv)) std::swap(a, b);
  if (b.degree_in(xv) == 0) {
    // gcd of b (in y only) with the content of a
    UPolyQ c = gcd(content(a), upoly_in_y(b));
    return MPolyQ::from_univariate(c.monic(), yv);
  }
  UPolyQ ca = content(a), cb = content(b);
  a = divide_content(a, ca);
  b = divide_content(b, cb);
  UPolyQ cg = gcd(ca, cb);
  while (true) {
    int da = a.degree_in(xv), db = b.degree_in(xv);
    if (db < 0) break;
    // pseudo-remainder of a by b in x
    MPolyQ lb = b.coefficients_in(xv)[db];
    MPolyQ lbv = MPolyQ::from_coefficients({lb}, xv);
    MPolyQ r = a;
    int steps = da - db + 1;
    for (int i = 0; i < steps && r.degree_in(xv) >= db; ++i) {
      int dr = r.degree_in(xv);
      MPolyQ lr = r.coefficients_in(xv)[dr];
      Mono shift{0, 0, 0};
      shift[xv] = dr - db;
      r = lbv * r - MPolyQ::term(shift, Rational(1)) * MPolyQ::from_coefficients({lr}, xv) * b;
    }
    if (r.is_zero()) {
      a = b;
      break;
    }
    if (r.degree_in(xv) == 0) {
      a = MPolyQ::constant(Rational(1));
      break;
    }
    a = b;
    b = divide_content(r, content(r));
  }
  MPolyQ prim =
      a.degree_in(xv) == 0 ? MPolyQ::constant(Rational(1)) : divide_content(a, content(a));
  return MPolyQ::from_univariate(cg, yv) * prim;
}

}  // namespace detail

// gcd of homogeneous forms in z0, z1, z2 (degree small); the result is
// homogeneous and normalized with leading grlex coefficient 1.
inline MPolyQ ternary_form_gcd(const MPolyQ& f, const MPolyQ& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw std::invalid_argument("ternary_form_gcd expects homogeneous forms");
  // split off powers of z2
  auto z2_mult = [](const MPolyQ& p) {
    int v = p.degree();
    for (auto& [m, c] : p.terms()) v = std::min(v, m[2]);
    return v;
  };
  int vf = z2_mult(f), vg = z2_mult(g);
  MPolyQ f1 = exact_divide(f, MPolyQ::term(Mono{0, 0, vf}, Rational(1)));
  MPolyQ g1 = exact_divide(g, MPolyQ::term(Mono{0, 0, vg}, Rational(1)));
  // dehomogenize at z2 = 1 and compute a bivariate gcd in (z0, z1)
  auto dehom = [](const MPolyQ& p) {
    MPolyQ r;
    for (auto& [m, c] : p.terms()) r.add_term(Mono{m[0], m[1], 0}, c);
    return r;
  };
  MPolyQ h = detail::bivariate_gcd(dehom(f1), dehom(g1), 0, 1);
  // rehomogenize to the total degree of h
  int dh = h.degree();
  MPolyQ H;
  for (auto& [m, c] : h.terms()) H.add_term(Mono{m[0], m[1], dh - m[0] - m[1]}, c);
  MPolyQ result = MPolyQ::term(Mono{0, 0, std::min(vf, vg)}, Rational(1)) * H;
  if (!result.is_zero()) result = (Rational(1) / result.lead().second) * result;
  return result;
}

}  // namespace ncplane
