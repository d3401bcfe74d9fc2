#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "upoly.hpp"

namespace ncplane {

// An element of Q[u]/(h) for a monic irreducible h over the rationals.  A null
// modulus means the element is a plain rational, which lets NFElem act as a
// field type for generic polynomial code without threading a field context.
class NFElem {
 public:
  using Modulus = std::shared_ptr<const UPolyQ>;

  NFElem() = default;
  NFElem(int v) : rep_(UPolyQ::constant(Rational(v))) {}
  explicit NFElem(const Rational& v) : rep_(UPolyQ::constant(v)) {}
  NFElem(Modulus mod, UPolyQ rep) : mod_(std::move(mod)), rep_(std::move(rep)) { reduce(); }

  static NFElem generator(const Modulus& mod) { return NFElem(mod, UPolyQ::x()); }

  const Modulus& modulus() const { return mod_; }
  const UPolyQ& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("element is not rational");
    return rep_.coeff(0);
  }

  friend bool operator==(const NFElem& a, const NFElem& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  NFElem operator-() const { return NFElem(mod_, -rep_); }
  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    return NFElem(join(a, b), a.rep_ + b.rep_);
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    return NFElem(join(a, b), a.rep_ * b.rep_);
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

  NFElem inverse() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    if (!mod_ || rep_.is_constant()) {
      return NFElem(mod_, UPolyQ::constant(Rational(1) / rep_.coeff(0)));
    }
    auto [g, s, t] = extended_gcd(rep_, *mod_);
    if (g.deg() != 0) throw std::logic_error("non-invertible residue; modulus not irreducible?");
    return NFElem(mod_, (Rational(1) / g.coeff(0)) * s);
  }

  NFElem pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    NFElem r(1), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  std::string to_string() const { return rep_.to_string("u"); }

 private:
  void reduce() {
    if (mod_ && rep_.deg() >= mod_->deg()) rep_ = rep_ % *mod_;
  }
  static Modulus join(const NFElem& a, const NFElem& b) {
    if (!a.mod_) return b.mod_;
    if (!b.mod_) return a.mod_;
    if (a.mod_ == b.mod_ || *a.mod_ == *b.mod_) return a.mod_;
    throw std::logic_error("mixing distinct number fields");
  }

  Modulus mod_;
  UPolyQ rep_;
};

inline std::string coeff_to_string(const NFElem& e) { return "(" + e.to_string() + ")"; }

// Lifts a rational polynomial into K[x] for K = Q[u]/(h).
inline UPoly<NFElem> lift_to_field(const UPolyQ& p, const NFElem::Modulus& mod) {
  std::vector<NFElem> c;
  c.reserve(p.deg() + 1);
  for (int i = 0; i <= p.deg(); ++i) c.emplace_back(mod, UPolyQ::constant(p.coeff(i)));
  return UPoly<NFElem>(std::move(c));
}

}  // namespace ncplane
