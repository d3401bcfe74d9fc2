#pragma once

// Small finite fields GF(p^k) for the exhaustive basepoint-freeness oracle.
// Elements are encoded as integers 0..q-1 whose base-p digits are the
// coefficients of a residue modulo a fixed irreducible polynomial.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gfq {

class Field {
 public:
  Field(int p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (k_ == 1) {
      modulus_ = {0, 1};
    } else {
      modulus_ = find_irreducible();
    }
    build_tables();
  }

  int q() const { return q_; }
  int p() const { return p_; }

  int add(int a, int b) const {
    if (!add_.empty()) return add_[a * q_ + b];
    return add_slow(a, b);
  }
  int neg(int a) const {
    int r = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      r += ((p_ - a % p_) % p_) * mul;
      a /= p_;
      mul *= p_;
    }
    return r;
  }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  int embed_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
  }

 private:
  int add_slow(int a, int b) const {
    int r = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * mul;
      a /= p_;
      b /= p_;
      mul *= p_;
    }
    return r;
  }

  std::vector<int> poly_of(int a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }
  int of_poly(const std::vector<int>& c) const {
    int r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + c[i];
    return r;
  }
  // multiply two residues as polynomials mod the irreducible modulus
  int raw_mul(int a, int b) const {
    std::vector<int> pa = poly_of(a), pb = poly_of(b);
    std::vector<int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      int c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < k_; ++i)
        prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(k_);
    return of_poly(prod);
  }
  bool is_irreducible(const std::vector<int>& m) const {
    // brute force: no roots and no factor products for k <= 4 via trial division
    // by all monic polys of degree <= k/2
    int bound = 1;
    for (int i = 0; i < k_ / 2; ++i) bound *= p_;
    for (int deg = 1; deg <= k_ / 2; ++deg) {
      int count = 1;
      for (int i = 0; i < deg; ++i) count *= p_;
      for (int code = 0; code < count; ++code) {
        std::vector<int> div(deg + 1);
        int c = code;
        for (int i = 0; i < deg; ++i) {
          div[i] = c % p_;
          c /= p_;
        }
        div[deg] = 1;
        // long division of m by div over F_p
        std::vector<int> r(m.begin(), m.end());
        while (static_cast<int>(r.size()) > deg) {
          int lead = r.back();
          if (lead != 0) {
            int shift = static_cast<int>(r.size()) - (deg + 1);
            for (int i = 0; i <= deg; ++i)
              r[shift + i] = ((r[shift + i] - lead * div[i]) % p_ + p_) % p_;
          }
          r.pop_back();
        }
        bool zero = true;
        for (int v : r)
          if (v != 0) zero = false;
        if (zero) return false;
      }
    }
    (void)bound;
    return true;
  }
  std::vector<int> find_irreducible() const {
    int count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (int code = 0; code < count; ++code) {
      std::vector<int> m(k_ + 1);
      int c = code;
      for (int i = 0; i < k_; ++i) {
        m[i] = c % p_;
        c /= p_;
      }
      m[k_] = 1;
      if (is_irreducible(m)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
  }
  void build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (int g = 2; g < q_; ++g) {
      int x = 1;
      bool ok = true;
      for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        x = raw_mul(x, g);
        if (x == 1 && i + 1 < q_ - 1) {
          ok = false;
          break;
        }
      }
      if (ok && x == 1) {
        for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
        if (q_ <= 1024) {
          add_.assign(static_cast<std::size_t>(q_) * q_, 0);
          for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) add_[a * q_ + b] = add_slow(a, b);
        }
        return;
      }
    }
    throw std::logic_error("no field generator found");
  }

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> exp_, log_;
  std::vector<int> add_;
};

}  // namespace gfq
