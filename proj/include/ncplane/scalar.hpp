#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "upoly.hpp"

namespace ncplane {

// n-th cyclotomic polynomial, monic over the rationals.
inline const UPolyQ& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::map<int, UPolyQ> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d, bottom-up.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<Rational> xd(d + 1, Rational(0));
    xd[0] = -1;
    xd[d] = 1;
    UPolyQ q(std::move(xd));
    for (int e = 1; e < d; ++e)
      if (d % e == 0) q = q / cache.at(e);
    cache.emplace(d, std::move(q));
  }
  return cache.at(n);
}

// An element of the rational field or of a cyclotomic field Q(zeta_n),
// represented as a residue modulo the n-th cyclotomic polynomial.  Order 1
// means a plain rational.  All arithmetic is exact.
class Scalar {
 public:
  Scalar() : order_(1) {}
  Scalar(int v) : order_(1), rep_(UPolyQ::constant(Rational(v))) {}
  explicit Scalar(const Rational& v) : order_(1), rep_(UPolyQ::constant(v)) {}
  Scalar(int order, UPolyQ rep) : order_(order), rep_(std::move(rep)) { reduce(); }

  static Scalar root_of_unity(int n, int k = 1) {
    k %= n;
    if (k < 0) k += n;
    return Scalar(n, UPolyQ::monomial(k, Rational(1)));
  }

  int order() const { return order_; }
  const UPolyQ& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational");
    return rep_.coeff(0);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    auto [x, y] = unify(a, b);
    return x.rep_ == y.rep_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const { return Scalar(order_, -rep_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    auto [x, y] = unify(a, b);
    return Scalar(x.order_, x.rep_ + y.rep_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    auto [x, y] = unify(a, b);
    return Scalar(x.order_, x.rep_ * y.rep_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_rational()) return Scalar(Rational(1) / rep_.coeff(0));
    auto [g, s, t] = extended_gcd(rep_, cyclotomic_polynomial(order_));
    if (g.deg() != 0) throw std::logic_error("non-invertible cyclotomic residue");
    return Scalar(order_, (Rational(1) / g.coeff(0)) * s);
  }

  Scalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  bool is_root_of_unity(int m) const { return pow(m) == Scalar(1); }

  // Discrete log with respect to zeta_n; the value must be an n-th root of unity.
  int log_root_of_unity(int n) const {
    for (int k = 0; k < n; ++k)
      if (*this == root_of_unity(n, k)) return k;
    throw std::invalid_argument("scalar is not a power of zeta_" + std::to_string(n));
  }

  std::string to_string() const {
    if (is_rational()) return rational_to_string(rep_.coeff(0));
    return rep_.to_string("z");
  }

 private:
  void reduce() {
    if (order_ == 1) {
      if (rep_.deg() > 0) rep_ = rep_ % cyclotomic_polynomial(1);
      return;
    }
    rep_ = rep_ % cyclotomic_polynomial(order_);
  }
  static std::pair<Scalar, Scalar> unify(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return {a, b};
    if (a.is_rational()) return {Scalar(b.order_, a.rep_), b};
    if (b.is_rational()) return {a, Scalar(a.order_, b.rep_)};
    throw std::logic_error("mixing cyclotomic fields of different orders");
  }

  int order_;
  UPolyQ rep_;
};

inline std::string coeff_to_string(const Scalar& s) { return s.to_string(); }

}  // namespace ncplane
