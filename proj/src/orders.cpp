#include "ncplane/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncplane {

namespace {

// Multiplication of quaternion basis words, as (t-exponent, sign, out word).
struct WordProduct {
  int exp;
  int sign;
  int out;
};

// basis order (1, i, j, ij)
WordProduct word_product_ij(int a, int b, int e1, int e2) {
  if (a == 0) return {0, 1, b};
  if (b == 0) return {0, 1, a};
  if (a == 1 && b == 1) return {e1, 1, 0};
  if (a == 1 && b == 2) return {0, 1, 3};
  if (a == 1 && b == 3) return {e1, 1, 2};
  if (a == 2 && b == 1) return {0, -1, 3};
  if (a == 2 && b == 2) return {e2, 1, 0};
  if (a == 2 && b == 3) return {e2, -1, 1};
  if (a == 3 && b == 1) return {e1, -1, 2};
  if (a == 3 && b == 2) return {e2, 1, 1};
  return {e1 + e2, -1, 0};  // ij * ij
}

// basis order (1, i, j, ji), used for the trace pairing
WordProduct word_product_ji(int a, int b, int e1, int e2) {
  if (a == 0) return {0, 1, b};
  if (b == 0) return {0, 1, a};
  if (a == 1 && b == 1) return {e1, 1, 0};
  if (a == 1 && b == 2) return {0, -1, 3};  // i j = -ji
  if (a == 1 && b == 3) return {e1, -1, 2};
  if (a == 2 && b == 1) return {0, 1, 3};
  if (a == 2 && b == 2) return {e2, 1, 0};
  if (a == 2 && b == 3) return {e2, 1, 1};
  if (a == 3 && b == 1) return {e1, 1, 2};
  if (a == 3 && b == 2) return {e2, -1, 1};
  return {e1 + e2, -1, 0};  // ji * ji
}

}  // namespace

QuaternionModel make_quaternion_model(int e1, int e2) {
  if (e1 < 0 || e2 < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (e1 > e2) std::swap(e1, e2);
  return {e1, e2};
}

std::string to_string(ResidueType r) {
  switch (r) {
    case ResidueType::Mat2: return "Mat2";
    case ResidueType::KxK: return "kxk";
    case ResidueType::K: return "k";
    default: return "other";
  }
}

std::array<int, 4> codifference_exponents(const QuaternionModel& m) {
  // reduced trace pairing on (1, i, j, ji): products of basis words are
  // sign * t^exp * word, and trd picks out twice the 1-component
  std::array<int, 4> out{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      WordProduct p = word_product_ji(a, b, m.e1, m.e2);
      if (a == b) {
        if (p.out != 0) throw std::logic_error("trace pairing not diagonal");
        out[a] = -p.exp;
      } else {
        if (p.out == 0) throw std::logic_error("trace pairing not diagonal");
      }
    }
  }
  std::array<int, 4> expected{0, -m.e1, -m.e2, -m.e1 - m.e2};
  if (out != expected) throw std::logic_error("trace pairing disagrees with canonical formula");
  return out;
}

OrderProps quaternion_properties(const QuaternionModel& m) {
  OrderProps p;
  p.maximal = m.e1 == 0 && m.e2 == 0;
  p.hereditary = m.e1 == 0 && m.e2 <= 1;
  p.bass = m.e1 <= 1;
  p.gorenstein = true;
  p.nodal = (m.e1 == 0 && m.e2 <= 2) || (m.e1 == 1 && m.e2 == 1);
  p.tiled = m.e1 == 0;
  if (m.e1 == 0 && m.e2 == 0) {
    p.residue = ResidueType::Mat2;
  } else if (m.e1 == 0) {
    p.residue = ResidueType::KxK;
  } else {
    p.residue = ResidueType::K;
  }
  p.canonical_exponents = codifference_exponents(m);
  return p;
}

FinDimAlgebra::FinDimAlgebra(int dim, std::vector<Scalar> unit,
                             std::vector<std::vector<Entry>> table, std::vector<int> idempotents,
                             int scalar_order)
    : dim_(dim),
      scalar_order_(scalar_order),
      unit_(std::move(unit)),
      table_(std::move(table)),
      idempotents_(std::move(idempotents)) {
  verify_associativity();
}

void FinDimAlgebra::verify_associativity() {
  auto compose = [&](const Entry& e, int k, bool right) -> Entry {
    if (e.index < 0) return {-1, Scalar(0)};
    const Entry& f = right ? table_[e.index][k] : table_[k][e.index];
    if (f.index < 0) return {-1, Scalar(0)};
    return {f.index, e.scalar * f.scalar};
  };
  auto check_triple = [&](int i, int j, int k) {
    Entry lhs = compose(table_[i][j], k, true);   // (e_i e_j) e_k
    Entry rhs = compose(table_[j][k], i, false);  // e_i (e_j e_k)
    bool lz = lhs.index < 0 || lhs.scalar.is_zero();
    bool rz = rhs.index < 0 || rhs.scalar.is_zero();
    if (lz && rz) return true;
    if (lz != rz) return false;
    return lhs.index == rhs.index && lhs.scalar == rhs.scalar;
  };
  if (dim_ <= kFullAssociativityBound) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          if (!check_triple(i, j, k))
            throw std::logic_error("multiplication table not associative");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int trial = 0; trial < 20000; ++trial) {
      int i = static_cast<int>(next() % dim_);
      int j = static_cast<int>(next() % dim_);
      int k = static_cast<int>(next() % dim_);
      if (!check_triple(i, j, k)) throw std::logic_error("multiplication table not associative");
    }
  }
  std::vector<Scalar> e = unit_;
  for (int i = 0; i < dim_; ++i) {
    std::vector<Scalar> v = basis_vector(i);
    if (mul(e, v) != v || mul(v, e) != v) throw std::logic_error("unit element is not a unit");
  }
  associativity_verified_ = true;
}

std::vector<Scalar> FinDimAlgebra::basis_vector(int i) const {
  std::vector<Scalar> v(dim_, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

std::vector<Scalar> FinDimAlgebra::mul(const std::vector<Scalar>& a,
                                       const std::vector<Scalar>& b) const {
  std::vector<Scalar> out(dim_, Scalar(0));
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Entry& e = table_[i][j];
      if (e.index < 0) continue;
      out[e.index] = out[e.index] + a[i] * b[j] * e.scalar;
    }
  }
  return out;
}

FinDimAlgebra truncated_order(const QuaternionModel& m, int n_trunc) {
  if (n_trunc <= m.e1 + m.e2 + 1)
    throw std::invalid_argument("truncation level too small for the relation exponents");
  int dim = 4 * n_trunc;
  auto idx = [&](int k, int w) { return 4 * k + w; };
  std::vector<std::vector<FinDimAlgebra::Entry>> table(
      dim, std::vector<FinDimAlgebra::Entry>(dim, {-1, Scalar(0)}));
  for (int ka = 0; ka < n_trunc; ++ka)
    for (int wa = 0; wa < 4; ++wa)
      for (int kb = 0; kb < n_trunc; ++kb)
        for (int wb = 0; wb < 4; ++wb) {
          WordProduct p = word_product_ij(wa, wb, m.e1, m.e2);
          int k = ka + kb + p.exp;
          if (k >= n_trunc) continue;
          table[idx(ka, wa)][idx(kb, wb)] = {idx(k, p.out), Scalar(p.sign)};
        }
  std::vector<Scalar> unit(dim, Scalar(0));
  unit[idx(0, 0)] = Scalar(1);
  return FinDimAlgebra(dim, std::move(unit), std::move(table), {idx(0, 0)}, 1);
}

namespace {

Matrix<Scalar> subspace_product(const FinDimAlgebra& a, const Matrix<Scalar>& u,
                                const Matrix<Scalar>& v) {
  Matrix<Scalar> rows;
  for (const auto& x : u)
    for (const auto& y : v) rows.push_back(a.mul(x, y));
  return row_basis(std::move(rows));
}

}  // namespace

Matrix<Scalar> radical(const FinDimAlgebra& a) {
  if (!a.associativity_verified()) throw std::logic_error("associativity check failed");
  const int d = a.dim();
  std::vector<Scalar> basis_trace(d, Scalar(0));
  for (int k = 0; k < d; ++k) {
    Scalar t(0);
    for (int i = 0; i < d; ++i) {
      const auto& e = a.basis_product(k, i);
      if (e.index == i) t = t + e.scalar;
    }
    basis_trace[k] = t;
  }
  // Gram matrix of (x, y) -> tr(L_{xy}); its kernel is the radical in
  // characteristic zero
  Matrix<Scalar> gram(d, std::vector<Scalar>(d, Scalar(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto& e = a.basis_product(i, j);
      if (e.index >= 0 && !basis_trace[e.index].is_zero())
        gram[i][j] = e.scalar * basis_trace[e.index];
    }
  Matrix<Scalar> rad = nullspace(gram);
  rad = row_basis(std::move(rad));
  // the radical must be nilpotent
  Matrix<Scalar> power = rad;
  int steps = 0;
  while (!power.empty()) {
    power = subspace_product(a, power, rad);
    if (++steps > d + 1) throw std::logic_error("radical is not nilpotent");
  }
  return rad;
}

namespace {

std::vector<Scalar> reduce_mod(const Matrix<Scalar>& rref_basis, std::vector<Scalar> v) {
  for (const auto& row : rref_basis) {
    int lead = -1;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!(row[c] == Scalar(0))) {
        lead = static_cast<int>(c);
        break;
      }
    if (lead < 0 || v[lead].is_zero()) continue;
    Scalar f = v[lead];
    for (std::size_t c = 0; c < row.size(); ++c) v[c] = v[c] - f * row[c];
  }
  return v;
}

struct Quotient {
  std::vector<int> coords;  // basis indices spanning A/J
  Matrix<Scalar> rad;       // RREF radical basis
  std::vector<std::vector<std::vector<Scalar>>> table;
};

Quotient quotient_algebra(const FinDimAlgebra& a, const Matrix<Scalar>& rad_in) {
  Quotient q;
  q.rad = rad_in;
  rref(q.rad);
  std::vector<bool> is_pivot(a.dim(), false);
  for (const auto& row : q.rad) {
    for (int c = 0; c < a.dim(); ++c)
      if (!(row[c] == Scalar(0))) {
        is_pivot[c] = true;
        break;
      }
  }
  for (int c = 0; c < a.dim(); ++c)
    if (!is_pivot[c]) q.coords.push_back(c);
  int n = static_cast<int>(q.coords.size());
  q.table.assign(n, std::vector<std::vector<Scalar>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<Scalar> prod =
          reduce_mod(q.rad, a.mul(a.basis_vector(q.coords[x]), a.basis_vector(q.coords[y])));
      std::vector<Scalar> coeffs(n, Scalar(0));
      for (int k = 0; k < n; ++k) coeffs[k] = prod[q.coords[k]];
      q.table[x][y] = std::move(coeffs);
    }
  return q;
}

bool quotient_commutative(const Quotient& q) {
  int n = static_cast<int>(q.coords.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (q.table[x][y] != q.table[y][x]) return false;
  return true;
}

bool quotient_semisimple(const Quotient& q) {
  int n = static_cast<int>(q.coords.size());
  std::vector<Scalar> tr(n, Scalar(0));
  for (int k = 0; k < n; ++k) {
    Scalar t(0);
    for (int i = 0; i < n; ++i) t = t + q.table[k][i][i];
    tr[k] = t;
  }
  Matrix<Scalar> gram(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar g(0);
      for (int k = 0; k < n; ++k)
        if (!q.table[i][j][k].is_zero()) g = g + q.table[i][j][k] * tr[k];
      gram[i][j] = g;
    }
  return rank(gram) == n;
}

}  // namespace

ResidueType residue_type(const FinDimAlgebra& a) {
  Matrix<Scalar> rad_basis = radical(a);
  Quotient q = quotient_algebra(a, rad_basis);
  if (!quotient_semisimple(q)) throw std::logic_error("radical quotient is not semisimple");
  switch (q.coords.size()) {
    case 1: return ResidueType::K;
    case 2: return ResidueType::KxK;
    case 4: return quotient_commutative(q) ? ResidueType::Other : ResidueType::Mat2;
    default: return ResidueType::Other;
  }
}

int max_orthogonal_idempotents(const FinDimAlgebra& a) {
  switch (residue_type(a)) {
    case ResidueType::Mat2: return 2;
    case ResidueType::KxK: return 2;
    case ResidueType::K: return 1;
    default: throw std::logic_error("unexpected residue algebra");
  }
}

FinDimAlgebra fiber_algebra(int n, int e) {
  if (n < 1 || e < 1) throw std::invalid_argument("need n >= 1 and e >= 1");
  int dim = n * n * e * e;
  auto idx = [&](int i, int j, int al, int be) { return ((i * n + j) * e + al) * e + be; };
  Scalar zeta = Scalar::root_of_unity(e);
  std::vector<std::vector<FinDimAlgebra::Entry>> table(
      dim, std::vector<FinDimAlgebra::Entry>(dim, {-1, Scalar(0)}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int al = 0; al < e; ++al)
        for (int be = 0; be < e; ++be)
          for (int k = 0; k < n; ++k)
            for (int ga = 0; ga < e; ++ga)
              for (int de = 0; de < e; ++de) {
                // e_{ij}^{(al,be)} e_{jk}^{(ga,de)}: the x-offset carried by
                // below-diagonal entries bumps alpha exactly in the
                // wrap-around index patterns
                int bump = (i > j ? 1 : 0) + (j > k ? 1 : 0) - (i > k ? 1 : 0);
                int na = al + ga + bump;
                int nb = be + de;
                if (na >= e || nb >= e) continue;
                Scalar sc = zeta.pow(be * (ga + (j > k ? 1 : 0)));
                table[idx(i, j, al, be)][idx(j, k, ga, de)] = {idx(i, k, na, nb), sc};
              }
  std::vector<Scalar> unit(dim, Scalar(0));
  std::vector<int> idem;
  for (int i = 0; i < n; ++i) {
    unit[idx(i, i, 0, 0)] = Scalar(1);
    idem.push_back(idx(i, i, 0, 0));
  }
  return FinDimAlgebra(dim, std::move(unit), std::move(table), std::move(idem), e);
}

Quiver fiber_quiver(const FinDimAlgebra& a, int n, int e) {
  if (a.idempotents().empty()) throw std::invalid_argument("idempotent list missing");
  if (static_cast<int>(a.idempotents().size()) != n)
    throw std::invalid_argument("idempotent list does not match the vertex count");
  Matrix<Scalar> rad_basis = radical(a);
  Matrix<Scalar> rad2 = subspace_product(a, rad_basis, rad_basis);
  Quiver quiver;
  quiver.vertices = n;
  auto dim_of = [](Matrix<Scalar> rows) { return static_cast<int>(row_basis(std::move(rows)).size()); };
  int rad2_dim = dim_of(rad2);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Matrix<Scalar> span = rad2;
      std::vector<Scalar> eu = a.basis_vector(a.idempotents()[u]);
      std::vector<Scalar> ev = a.basis_vector(a.idempotents()[v]);
      for (const auto& x : rad_basis) span.push_back(a.mul(eu, a.mul(x, ev)));
      int arrows_uv = dim_of(span) - rad2_dim;
      for (int c = 0; c < arrows_uv; ++c) {
        Quiver::Arrow ar;
        ar.source = u;
        ar.target = v;
        bool is_loop_slot = (u == v) && e >= 2 && c == 0 && n >= 2;
        if (n == 1) {
          ar.name = c == 0 && e >= 2 ? "lambda_1" : "mu_1,1";
        } else if (is_loop_slot) {
          ar.name = "lambda_" + std::to_string(u + 1);
        } else {
          ar.name = "mu_" + std::to_string(u + 1) + "," + std::to_string(v + 1);
        }
        quiver.arrows.push_back(ar);
      }
    }
  if (n == 1 && e == 1) return quiver;  // one-dimensional: nothing to relate
  auto idx = [&](int i, int j, int al, int be) { return ((i * n + j) * e + al) * e + be; };
  auto basis_elt = [&](int i, int j, int al, int be) { return a.basis_vector(idx(i, j, al, be)); };
  auto is_zero_vec = [&](const std::vector<Scalar>& v) {
    for (const auto& s : v)
      if (!s.is_zero()) return false;
    return true;
  };
  auto mu = [&](int i) {  // arrow i -> i+1 mod n
    if (n == 1) return basis_elt(0, 0, 1, 0);
    return basis_elt(i, (i + 1) % n, 0, 0);
  };
  // relation family 1: each full cycle to the power e vanishes, and no sooner
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> cyc = a.unit();
    for (int step = 0; step < n; ++step) cyc = a.mul(cyc, mu((i + step) % n));
    std::vector<Scalar> pw = a.unit();
    for (int k = 0; k < e; ++k) pw = a.mul(pw, cyc);
    if (!is_zero_vec(pw)) throw std::logic_error("cycle relation fails");
    if (e >= 2) {
      std::vector<Scalar> pw1 = a.unit();
      for (int k = 0; k < e - 1; ++k) pw1 = a.mul(pw1, cyc);
      if (is_zero_vec(pw1)) throw std::logic_error("cycle vanishes below exponent e");
    }
    quiver.relations.push_back("(cycle at vertex " + std::to_string(i + 1) + ")^" +
                               std::to_string(e) + " = 0");
  }
  if (e >= 2) {
    auto lambda = [&](int i) { return basis_elt(i, i, 0, 1); };
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<Scalar> lhs = a.mul(lambda(i), mu(i));
      std::vector<Scalar> rhs = a.mul(mu(i), lambda(i + 1));
      std::vector<Scalar> diff(lhs.size());
      for (std::size_t k = 0; k < lhs.size(); ++k) diff[k] = lhs[k] - rhs[k];
      if (!is_zero_vec(diff)) throw std::logic_error("straight commutation relation fails");
      quiver.relations.push_back("lambda_" + std::to_string(i + 1) + " mu_" +
                                 std::to_string(i + 1) + "," + std::to_string(i + 2) + " = mu_" +
                                 std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                 " lambda_" + std::to_string(i + 2));
    }
    Scalar zeta = Scalar::root_of_unity(e);
    std::vector<Scalar> lhs = a.mul(lambda(n - 1), mu(n - 1));
    std::vector<Scalar> rhs = a.mul(mu(n - 1), lambda(0));
    std::vector<Scalar> diff(lhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) diff[k] = lhs[k] - zeta * rhs[k];
    if (!is_zero_vec(diff)) throw std::logic_error("twisted commutation relation fails");
    quiver.relations.push_back("lambda_" + std::to_string(n) + " mu_" + std::to_string(n) +
                               ",1 = zeta mu_" + std::to_string(n) + ",1 lambda_1");
  }
  return quiver;
}

}  // namespace ncplane
