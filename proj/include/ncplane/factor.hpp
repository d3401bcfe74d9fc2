#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mpoly.hpp"
#include "scalar.hpp"

namespace ncplane {
namespace detail {

using ZPoly = std::vector<BigInt>;  // dense, little endian, trimmed

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  ztrim(c);
  return c;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

inline BigInt symmetric_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

inline ZPoly zmod(const ZPoly& a, const BigInt& m) {
  ZPoly c = a;
  for (auto& v : c) v = symmetric_mod(v, m);
  ztrim(c);
  return c;
}

// Division by a monic divisor with all arithmetic reduced mod m.
inline std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r = zmod(a, m), q;
  if (zdeg(r) >= zdeg(b)) q.assign(zdeg(r) - zdeg(b) + 1, 0);
  while (zdeg(r) >= zdeg(b)) {
    int d = zdeg(r) - zdeg(b);
    BigInt f = r.back();
    q[d] = f;
    for (int i = 0; i <= zdeg(b); ++i) r[d + i] = symmetric_mod(r[d + i] - f * b[i], m);
    ztrim(r);
  }
  ztrim(q);
  return {zmod(q, m), r};
}

// --- arithmetic in F_p for a machine-size prime -----------------------------

using FpPoly = std::vector<std::int64_t>;

inline void fptrim(FpPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int fpdeg(const FpPoly& p) { return static_cast<int>(p.size()) - 1; }

inline std::int64_t fpinv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

inline FpPoly fpmul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  fptrim(c);
  return c;
}

inline FpPoly fpsub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
  fptrim(c);
  return c;
}

inline std::pair<FpPoly, FpPoly> fpdivmod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r = a, q;
  if (fpdeg(r) >= fpdeg(b)) q.assign(fpdeg(r) - fpdeg(b) + 1, 0);
  std::int64_t il = fpinv(b.back(), p);
  while (fpdeg(r) >= fpdeg(b)) {
    int d = fpdeg(r) - fpdeg(b);
    std::int64_t f = r.back() * il % p;
    q[d] = f;
    for (int i = 0; i <= fpdeg(b); ++i) r[d + i] = ((r[d + i] - f * b[i]) % p + p) % p;
    fptrim(r);
  }
  fptrim(q);
  return {q, r};
}

inline FpPoly fpmonic(const FpPoly& a, std::int64_t p) {
  if (a.empty()) return a;
  FpPoly c = a;
  std::int64_t il = fpinv(c.back(), p);
  for (auto& v : c) v = v * il % p;
  return c;
}

inline FpPoly fpgcd(FpPoly a, FpPoly b, std::int64_t p) {
  while (!b.empty()) {
    FpPoly r = fpdivmod(a, b, p).second;
    a = b;
    b = r;
  }
  return fpmonic(a, p);
}

inline FpPoly fppowmod(FpPoly base, BigInt e, const FpPoly& mod, std::int64_t p) {
  FpPoly r{1};
  base = fpdivmod(base, mod, p).second;
  while (e > 0) {
    if (e % 2 == 1) r = fpdivmod(fpmul(r, base, p), mod, p).second;
    base = fpdivmod(fpmul(base, base, p), mod, p).second;
    e /= 2;
  }
  return r;
}

// Deterministic Berlekamp factorization of a monic squarefree f over F_p.
inline std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p) {
  int n = fpdeg(f);
  if (n <= 1) return {f};
  // column i of m holds x^{p i} mod f, minus the identity; kernel vectors of m
  // are the coefficient vectors of the Berlekamp subalgebra.
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  FpPoly xp = fppowmod(FpPoly{0, 1}, BigInt(p), f, p);
  FpPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= fpdeg(cur); ++j) m[j][i] = cur[j];
    m[i][i] = ((m[i][i] - 1) % p + p) % p;
    cur = fpdivmod(fpmul(cur, xp, p), f, p).second;
  }
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    std::int64_t il = fpinv(m[row][col], p);
    for (int c = 0; c < n; ++c) m[row][c] = m[row][c] * il % p;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      std::int64_t f2 = m[r][col];
      for (int c = 0; c < n; ++c) m[r][c] = ((m[r][c] - f2 * m[row][c]) % p + p) % p;
    }
    pivot_col[row] = col;
    ++row;
  }
  std::vector<FpPoly> basis;
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    FpPoly v(n, 0);
    v[col] = 1;
    for (int r = 0; r < row; ++r) v[pivot_col[r]] = (p - m[r][col]) % p;
    fptrim(v);
    basis.push_back(v);
  }
  std::vector<FpPoly> factors{f};
  for (const auto& v : basis) {
    if (fpdeg(v) < 1) continue;  // the constant vector splits nothing
    if (factors.size() == basis.size()) break;
    std::vector<FpPoly> next;
    for (const auto& g : factors) {
      if (fpdeg(g) <= 1) {
        next.push_back(g);
        continue;
      }
      FpPoly rest = g;
      for (std::int64_t c = 0; c < p && fpdeg(rest) > 0; ++c) {
        FpPoly shifted = v;
        if (shifted.empty()) shifted.push_back(0);
        shifted[0] = ((shifted[0] - c) % p + p) % p;
        fptrim(shifted);
        FpPoly d = fpgcd(rest, fpdivmod(shifted, rest, p).second, p);
        if (fpdeg(d) > 0 && fpdeg(d) < fpdeg(rest)) {
          next.push_back(d);
          rest = fpdivmod(rest, d, p).first;
        } else if (fpdeg(d) > 0 && fpdeg(d) == fpdeg(rest)) {
          // whole thing; keep going with other c
        }
      }
      if (fpdeg(rest) > 0) next.push_back(rest);
    }
    factors = next;
  }
  return factors;
}

// Quadratic Hensel step: given f = g*h (mod m) with g, h monic and
// s*g + t*h = 1 (mod m), produce the same data mod m^2.
struct HenselPair {
  ZPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const BigInt& m) {
  BigInt m2 = m * m;
  ZPoly e = zmod(zsub(f, zmul(in.g, in.h)), m2);
  auto [q, r] = zdivmod_monic_mod(zmul(in.s, e), in.h, m2);
  ZPoly g2 = zmod(zadd(in.g, zadd(zmul(in.t, e), zmul(q, in.g))), m2);
  ZPoly h2 = zmod(zadd(in.h, r), m2);
  ZPoly b = zmod(zsub(zadd(zmul(in.s, g2), zmul(in.t, h2)), ZPoly{1}), m2);
  auto [c, d] = zdivmod_monic_mod(zmul(in.s, b), h2, m2);
  ZPoly s2 = zmod(zsub(in.s, d), m2);
  ZPoly t2 = zmod(zsub(in.t, zadd(zmul(in.t, b), zmul(c, g2))), m2);
  return {g2, h2, s2, t2};
}

// Lifts the factorization f = prod(parts) mod p (f, parts monic) to mod p^k
// with p^k >= bound, by recursive two-factor lifting.
inline std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<FpPoly>& parts,
                                           std::int64_t p, const BigInt& bound, BigInt& modulus_out) {
  // target modulus: smallest power p^(2^j) >= bound
  BigInt target = p;
  while (target < bound) target *= target;
  modulus_out = target;
  if (parts.size() == 1) {
    return {zmod(f, target)};
  }
  std::size_t half = parts.size() / 2;
  FpPoly gl{1}, hr{1};
  for (std::size_t i = 0; i < half; ++i) gl = fpmul(gl, parts[i], p);
  for (std::size_t i = half; i < parts.size(); ++i) hr = fpmul(hr, parts[i], p);
  // Bezout over F_p: s*gl + t*hr = 1 with deg s < deg hr, deg t < deg gl
  FpPoly a = gl, b = hr;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!b.empty()) {
    auto [q, r] = fpdivmod(a, b, p);
    a = b;
    b = r;
    FpPoly s2 = fpsub(s0, fpmul(q, s1, p), p);
    s0 = s1;
    s1 = s2;
    FpPoly t2 = fpsub(t0, fpmul(q, t1, p), p);
    t0 = t1;
    t1 = t2;
  }
  std::int64_t il = fpinv(a.back(), p);
  for (auto& v : s0) v = v * il % p;
  for (auto& v : t0) v = v * il % p;
  if (fpdeg(hr) > 0) s0 = fpdivmod(s0, hr, p).second;
  // recompute t0 = (1 - s0*gl)/hr exactly so the degree bounds hold
  FpPoly one{1};
  t0 = fpdivmod(fpsub(one, fpmul(s0, gl, p), p), hr, p).first;
  auto to_z = [](const FpPoly& q) {
    ZPoly z(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) z[i] = q[i];
    ztrim(z);
    return z;
  };
  HenselPair hp{to_z(gl), to_z(hr), to_z(s0), to_z(t0)};
  BigInt m = p;
  while (m < target) {
    hp = hensel_step(zmod(f, m * m), hp, m);
    m *= m;
  }
  std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
  std::vector<FpPoly> right(parts.begin() + half, parts.end());
  BigInt dummy;
  auto lf = hensel_lift_tree(hp.g, left, p, bound, dummy);
  auto rf = hensel_lift_tree(hp.h, right, p, bound, dummy);
  lf.insert(lf.end(), rf.begin(), rf.end());
  return lf;
}

inline BigInt zpoly_max_norm(const ZPoly& f) {
  BigInt m = 0;
  for (auto& c : f) m = std::max(m, BigInt(abs(c)));
  return m;
}

// Factors a monic squarefree integer polynomial into monic irreducible
// integer polynomials (Zassenhaus).
inline std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  int n = zdeg(f);
  if (n <= 1) return {f};
  // prime with squarefree reduction
  std::int64_t p = 0;
  static const std::int64_t candidates[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                            41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
  FpPoly fp;
  for (std::int64_t cand : candidates) {
    fp.assign(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      BigInt r = f[i] % cand;
      if (r < 0) r += cand;
      fp[i] = static_cast<std::int64_t>(r);
    }
    fptrim(fp);
    if (fpdeg(fp) != n) continue;  // cannot happen for monic f, kept for safety
    FpPoly der(fp.size() - 1);
    for (std::size_t i = 1; i < fp.size(); ++i) der[i - 1] = (i % cand) * fp[i] % cand;
    fptrim(der);
    if (fpdeg(fpgcd(fp, der, cand)) == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw std::logic_error("no squarefree prime reduction found");
  std::vector<FpPoly> parts = berlekamp(fpmonic(fp, p), p);
  if (parts.size() == 1) return {f};
  std::sort(parts.begin(), parts.end());
  // Mignotte-style bound on factor coefficients, times 2 for symmetric range
  BigInt bound = zpoly_max_norm(f) + 1;
  for (int i = 0; i < n; ++i) bound *= 2;
  bound *= 2 * BigInt(n + 1);
  BigInt modulus;
  std::vector<ZPoly> lifted = hensel_lift_tree(f, parts, p, bound, modulus);
  // subset recombination
  std::vector<ZPoly> out;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  bool changed = true;
  while (changed && !pool.empty()) {
    changed = false;
    for (std::size_t take = 1; take <= pool.size() && !changed; ++take) {
      std::vector<std::size_t> idx(take);
      for (std::size_t i = 0; i < take; ++i) idx[i] = i;
      while (true) {
        ZPoly cand{1};
        for (auto i : idx) cand = zmod(zmul(cand, pool[i]), modulus);
        // monic candidate; exact integer trial division against rest
        if (zdeg(cand) <= zdeg(rest)) {
          ZPoly q, r = rest;
          q.assign(zdeg(rest) - zdeg(cand) + 1, 0);
          while (zdeg(r) >= zdeg(cand)) {
            int d = zdeg(r) - zdeg(cand);
            BigInt fcoef = r.back();  // cand monic
            q[d] = fcoef;
            for (int i = 0; i <= zdeg(cand); ++i) r[d + i] -= fcoef * cand[i];
            ztrim(r);
          }
          if (r.empty()) {
            out.push_back(cand);
            ztrim(q);
            rest = q;
            std::vector<ZPoly> np;
            for (std::size_t i = 0; i < pool.size(); ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
            pool = np;
            changed = true;
            break;
          }
        }
        // next combination
        int pos = static_cast<int>(take) - 1;
        while (pos >= 0 && idx[pos] == pool.size() - take + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  if (zdeg(rest) > 0) out.push_back(rest);
  return out;
}

}  // namespace detail

// Deterministic order on polynomials: degree first, then coefficients from the
// leading one down.  Keeps factor lists and reports byte-stable.
inline bool poly_less(const UPolyQ& a, const UPolyQ& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

// Squarefree decomposition of a nonzero univariate rational polynomial.
// Factors are monic, pairwise coprime and squarefree; the unit times the
// product of factor^exponent reconstructs the input.
inline std::pair<Rational, std::vector<std::pair<UPolyQ, int>>> squarefree_decompose(
    const UPolyQ& f) {
  auto [unit, parts] = squarefree_decompose_unit(f);
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return {unit, parts};
}

struct RationalFactorization {
  Rational unit;
  std::vector<std::pair<UPolyQ, int>> factors;  // monic irreducible, exponent
};

// Complete factorization of a squarefree monic rational polynomial into monic
// irreducible rational polynomials.
inline std::vector<UPolyQ> factor_squarefree_monic(const UPolyQ& g) {
  if (g.deg() <= 1) return g.deg() == 1 ? std::vector<UPolyQ>{g} : std::vector<UPolyQ>{};
  // clear denominators, take the integer primitive part
  BigInt lcm = 1;
  for (int i = 0; i <= g.deg(); ++i) lcm = boost::multiprecision::lcm(lcm, den(g.coeff(i)));
  detail::ZPoly pz(g.deg() + 1);
  for (int i = 0; i <= g.deg(); ++i) pz[i] = num(g.coeff(i) * Rational(lcm));
  BigInt content = 0;
  for (auto& c : pz) content = boost::multiprecision::gcd(content, c);
  for (auto& c : pz) c /= content;
  BigInt l = pz.back();
  if (l < 0) {
    for (auto& c : pz) c = -c;
    l = -l;
  }
  // monicize: F(x) = l^(n-1) p(x/l), so F_i = p_i l^(n-1-i) and F_n = 1
  int n = detail::zdeg(pz);
  detail::ZPoly F(n + 1);
  F[n] = 1;
  BigInt scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    F[i] = pz[i] * scale;
    scale *= l;
  }
  std::vector<detail::ZPoly> zfactors = detail::factor_monic_squarefree(F);
  std::vector<UPolyQ> out;
  for (const auto& H : zfactors) {
    // undo the substitution: h(x) = H(l x), then make monic
    std::vector<Rational> c(H.size());
    BigInt pw = 1;
    for (std::size_t i = 0; i < H.size(); ++i) {
      c[i] = Rational(H[i] * pw);
      pw *= l;
    }
    out.push_back(UPolyQ(std::move(c)).monic());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

// Complete rational factorization of a nonzero univariate rational polynomial.
inline RationalFactorization factor_rational(const UPolyQ& f) {
  auto [unit, parts] = squarefree_decompose(f);
  RationalFactorization out;
  out.unit = unit;
  for (auto& [g, e] : parts) {
    for (auto& h : factor_squarefree_monic(g)) out.factors.emplace_back(h, e);
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

// Spec surface: factorization is only provided over the rationals.
inline RationalFactorization factor_univariate(const UPoly<Scalar>& f) {
  if (f.is_zero()) throw std::invalid_argument("zero input");
  std::vector<Rational> c(f.deg() + 1);
  for (int i = 0; i <= f.deg(); ++i) {
    if (!f.coeff(i).is_rational()) throw std::invalid_argument("unsupported field");
    c[i] = f.coeff(i).rational_value();
  }
  return factor_rational(UPolyQ(std::move(c)));
}

struct BinaryFactorization {
  Rational unit;
  std::vector<std::pair<MPolyQ, int>> factors;  // irreducible binary forms in (s,t)
};

// Factors a nonzero homogeneous binary form in the variables (s, t) = (0, 1).
// Irreducible factors other than t itself are normalized monic in s.
inline BinaryFactorization factor_binary_form(const MPolyQ& b) {
  if (b.is_zero()) throw std::invalid_argument("zero input");
  if (!b.is_homogeneous() || b.depends_on(2))
    throw std::invalid_argument("expected a binary form in s, t");
  int d = b.degree();
  int tmult = d;
  for (auto& [m, c] : b.terms()) tmult = std::min(tmult, m[1]);
  // dehomogenize at t = 1
  UPolyQ g;
  {
    std::vector<Rational> c(d + 1, Rational(0));
    for (auto& [m, co] : b.terms()) c[m[0]] = co;
    g = UPolyQ(std::move(c));
  }
  BinaryFactorization out;
  RationalFactorization rf = factor_rational(g);
  out.unit = rf.unit;
  if (tmult > 0) out.factors.emplace_back(MPolyQ::variable(1), tmult);
  for (auto& [h, e] : rf.factors) {
    MPolyQ H;
    for (int i = 0; i <= h.deg(); ++i) H.add_term(Mono{i, h.deg() - i, 0}, h.coeff(i));
    out.factors.emplace_back(H, e);
  }
  return out;
}

}  // namespace ncplane
