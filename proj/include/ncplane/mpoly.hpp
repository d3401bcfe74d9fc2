#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "upoly.hpp"

namespace ncplane {

// Exponent vector for at most three variables.
using Mono = std::array<int, 3>;

inline int total_degree(const Mono& m) { return m[0] + m[1] + m[2]; }

// Graded lexicographic order with variable 0 strongest; "greater" comparator so
// std::map iterates leading term first.
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Names attached to the variable slots, used for parsing and printing only.
struct VarSet {
  std::vector<std::string> names;
  int index_of(const std::string& s) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    return -1;
  }
};

inline const VarSet& vars_z() {
  static const VarSet v{{"z0", "z1", "z2"}};
  return v;
}
inline const VarSet& vars_st() {
  static const VarSet v{{"s", "t"}};
  return v;
}
inline const VarSet& vars_xyz() {
  static const VarSet v{{"X", "Y", "Z"}};
  return v;
}

// Sparse multivariate polynomial over a field K in at most three variables.
template <class K>
class MPoly {
 public:
  using Terms = std::map<Mono, K, GrlexGreater>;

  MPoly() = default;
  static MPoly constant(const K& v) {
    MPoly p;
    if (!(v == K(0))) p.t_[{0, 0, 0}] = v;
    return p;
  }
  static MPoly variable(int i) {
    MPoly p;
    Mono m{0, 0, 0};
    m[i] = 1;
    p.t_[m] = K(1);
    return p;
  }
  static MPoly term(const Mono& m, const K& v) {
    MPoly p;
    if (!(v == K(0))) p.t_[m] = v;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }

  int degree() const {  // total degree, -1 for 0
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, total_degree(m));
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = total_degree(t_.begin()->first);
    for (auto& [m, c] : t_)
      if (total_degree(m) != d) return false;
    return true;
  }
  bool depends_on(int var) const { return degree_in(var) > 0; }

  K coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? K(0) : it->second;
  }
  const std::pair<const Mono, K>& lead() const {
    if (t_.empty()) throw std::logic_error("lead of zero polynomial");
    return *t_.begin();
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  void add_term(const Mono& m, const K& v) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      if (!(v == K(0))) t_[m] = v;
    } else {
      it->second = it->second + v;
      if (it->second == K(0)) t_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) {
        Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const K& s, const MPoly& a) {
    MPoly r;
    if (s == K(0)) return r;
    r.t_ = a.t_;
    for (auto& [m, c] : r.t_) c = s * c;
    return r;
  }

  MPoly pow(int e) const {
    MPoly r = constant(K(1));
    MPoly b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  MPoly derivative(int var) const {
    MPoly r;
    for (auto& [m, c] : t_) {
      if (m[var] == 0) continue;
      Mono n = m;
      n[var] -= 1;
      r.add_term(n, K(m[var]) * c);
    }
    return r;
  }

  // Substitute images[i] for variable i.
  MPoly substitute(const std::array<MPoly, 3>& images) const {
    MPoly r;
    for (auto& [m, c] : t_) {
      MPoly term = constant(c);
      for (int v = 0; v < 3; ++v)
        if (m[v] > 0) term = term * images[v].pow(m[v]);
      r = r + term;
    }
    return r;
  }

  K eval(const std::array<K, 3>& x) const {
    K r(0);
    for (auto& [m, c] : t_) {
      K t = c;
      for (int v = 0; v < 3; ++v)
        for (int i = 0; i < m[v]; ++i) t = t * x[v];
      r = r + t;
    }
    return r;
  }

  // Exact division; throws if the quotient does not exist.
  friend MPoly exact_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly r = a, q;
    while (!r.is_zero()) {
      auto& [ml, cl] = r.lead();
      auto& [mb, cb] = b.lead();
      Mono m{ml[0] - mb[0], ml[1] - mb[1], ml[2] - mb[2]};
      if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw std::domain_error("inexact polynomial division");
      K c = cl / cb;
      MPoly t = term(m, c);
      q = q + t;
      r = r - t * b;
    }
    return q;
  }

  // View as univariate in `var`; remaining variables must not occur.
  UPoly<K> as_univariate(int var) const {
    std::vector<K> c(std::max(0, degree_in(var)) + 1, K(0));
    for (auto& [m, co] : t_) {
      for (int v = 0; v < 3; ++v)
        if (v != var && m[v] != 0) throw std::logic_error("polynomial is not univariate");
      c[m[var]] = co;
    }
    return UPoly<K>(std::move(c));
  }
  static MPoly from_univariate(const UPoly<K>& p, int var) {
    MPoly r;
    for (int i = 0; i <= p.deg(); ++i) {
      Mono m{0, 0, 0};
      m[var] = i;
      r.add_term(m, p.coeff(i));
    }
    return r;
  }

  // Coefficients with respect to `var`: result[i] collects the terms with
  // exponent i in `var`, with that variable removed.
  std::vector<MPoly> coefficients_in(int var) const {
    std::vector<MPoly> out(std::max(0, degree_in(var)) + 1);
    for (auto& [m, c] : t_) {
      Mono n = m;
      n[var] = 0;
      out[m[var]].add_term(n, c);
    }
    return out;
  }
  static MPoly from_coefficients(const std::vector<MPoly>& cs, int var) {
    MPoly r;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Mono shift{0, 0, 0};
      shift[var] = static_cast<int>(i);
      r = r + term(shift, K(1)) * cs[i];
    }
    return r;
  }

  std::string to_string(const VarSet& vars = vars_z()) const;

 private:
  Terms t_;
};

using MPolyQ = MPoly<Rational>;

// Deterministic total order on polynomials: degree, then terms in grlex order.
inline bool mpoly_less(const MPolyQ& a, const MPolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  GrlexGreater gt;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return gt(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.terms().size() < b.terms().size();
}

template <class K>
std::string MPoly<K>::to_string(const VarSet& vars) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : t_) {
    std::string mono;
    for (std::size_t v = 0; v < vars.names.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.names[v];
      if (m[v] >= 2) mono += "^" + std::to_string(m[v]);
    }
    std::string cs = coeff_to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mag = neg ? cs.substr(1) : cs;
    if (mono.empty()) {
      s += mag;
    } else if (mag == "1") {
      s += mono;
    } else {
      s += mag + "*" + mono;
    }
    first = false;
  }
  return s;
}

}  // namespace ncplane
