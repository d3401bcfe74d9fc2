#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ncplane {

inline std::string coeff_to_string(const Rational& q) { return rational_to_string(q); }

// Dense univariate polynomial over a field K.  The coefficient of x^i sits at
// index i; the zero polynomial has an empty coefficient vector.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  UPoly(std::initializer_list<K> c) : c_(c) { trim(); }

  static UPoly constant(const K& v) {
    UPoly p;
    p.c_.push_back(v);
    p.trim();
    return p;
  }
  static UPoly x() { return UPoly({K(0), K(1)}); }
  static UPoly monomial(int d, const K& v) {
    UPoly p;
    p.c_.assign(d + 1, K(0));
    p.c_[d] = v;
    p.trim();
    return p;
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }
  const K& lead() const {
    if (is_zero()) throw std::logic_error("lead of zero polynomial");
    return c_.back();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == K(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const K& s, const UPoly& a) {
    UPoly r = a;
    for (auto& v : r.c_) v = s * v;
    r.trim();
    return r;
  }

  UPoly pow(int e) const {
    UPoly r = constant(K(1));
    UPoly b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = K(static_cast<int>(i)) * c_[i];
    return UPoly(std::move(c));
  }

  K eval(const K& x) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Euclidean division; the divisor's leading coefficient must be invertible.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UPoly r = a;
    UPoly q;
    if (a.deg() >= b.deg()) q.c_.assign(a.deg() - b.deg() + 1, K(0));
    K inv_lead = K(1) / b.lead();
    while (!r.is_zero() && r.deg() >= b.deg()) {
      int d = r.deg() - b.deg();
      K f = r.lead() * inv_lead;
      q.c_[d] = f;
      for (int i = 0; i <= b.deg(); ++i) r.c_[d + i] = r.c_[d + i] - f * b.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  UPoly monic() const {
    if (is_zero()) return *this;
    return (K(1) / lead()) * *this;
  }

  UPoly shift_up(int d) const {  // multiply by x^d
    if (is_zero()) return *this;
    std::vector<K> c(c_.size() + d, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + d] = c_[i];
    return UPoly(std::move(c));
  }

  int valuation() const {  // multiplicity of the root x = 0; deg+1 convention avoided
    if (is_zero()) throw std::logic_error("valuation of zero polynomial");
    int v = 0;
    while (c_[v] == K(0)) ++v;
    return v;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

using UPolyQ = UPoly<Rational>;

template <class K>
UPoly<K> gcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> f = a, g = b;
  while (!g.is_zero()) {
    UPoly<K> r = f % g;
    f = g;
    g = r;
  }
  return f.monic();
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> extended_gcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
  UPoly<K> t0, t1 = UPoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    UPoly<K> s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    UPoly<K> t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K u = K(1) / r0.lead();
  return {u * r0, u * s0, u * t0};
}

// Yun's squarefree decomposition over a field of characteristic zero.
// Returns pairs (factor, exponent) with pairwise coprime squarefree factors,
// exponents strictly increasing; product of factor^exponent is f up to the
// leading unit, which is returned separately.
template <class K>
std::pair<K, std::vector<std::pair<UPoly<K>, int>>> squarefree_decompose_unit(const UPoly<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("zero input");
  K unit = f.lead();
  UPoly<K> p = f.monic();
  std::vector<std::pair<UPoly<K>, int>> out;
  if (p.deg() == 0) return {unit, out};
  UPoly<K> d = p.derivative();
  UPoly<K> a = gcd(p, d);
  UPoly<K> b = p / a;
  UPoly<K> c = d / a;
  int i = 1;
  while (true) {
    UPoly<K> delta = c - b.derivative();
    if (delta.is_zero()) {
      if (b.deg() > 0) out.emplace_back(b.monic(), i);
      break;
    }
    UPoly<K> g = gcd(b, delta);
    if (g.deg() > 0) out.emplace_back(g.monic(), i);
    b = b / g;
    c = delta / g;
    ++i;
  }
  return {unit, out};
}

template <class K>
std::string UPoly<K>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i] == K(0)) continue;
    if (!s.empty()) s += " + ";
    s += coeff_to_string(c_[i]);
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace ncplane
