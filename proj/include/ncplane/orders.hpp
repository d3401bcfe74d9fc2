#pragma once

#include <array>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace ncplane {

// Local quaternion order (t^e1, t^e2) over k[[t]], normalized so e1 <= e2.
struct QuaternionModel {
  int e1 = 0, e2 = 0;
};

QuaternionModel make_quaternion_model(int e1, int e2);

enum class ResidueType { Mat2, KxK, K, Other };

std::string to_string(ResidueType r);

// Decidable property profile of a local quaternion order.
struct OrderProps {
  bool maximal = false;
  bool hereditary = false;
  bool bass = false;
  bool gorenstein = false;
  bool nodal = false;
  bool tiled = false;
  ResidueType residue = ResidueType::Other;
  std::array<int, 4> canonical_exponents{};  // valuations of the dual lattice
};

// Closed-form profile; the canonical exponents come from the reduced-trace
// pairing computation, not a lookup.
OrderProps quaternion_properties(const QuaternionModel& m);

// Dual-lattice valuations (0, -e1, -e2, -e1-e2) computed from the reduced
// trace pairing on the basis (1, i, j, ji).
std::array<int, 4> codifference_exponents(const QuaternionModel& m);

// Finite-dimensional associative algebra with a distinguished basis; products
// of basis elements are scalar multiples of basis elements (all algebras here
// are monomial), stored as (index, scalar) or absent for zero.
class FinDimAlgebra {
 public:
  struct Entry {
    int index = -1;  // -1: product is zero
    Scalar scalar;
  };

  FinDimAlgebra(int dim, std::vector<Scalar> unit, std::vector<std::vector<Entry>> table,
                std::vector<int> idempotents, int scalar_order);

  int dim() const { return dim_; }
  int scalar_order() const { return scalar_order_; }
  const std::vector<int>& idempotents() const { return idempotents_; }
  const std::vector<Scalar>& unit() const { return unit_; }

  std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  std::vector<Scalar> basis_vector(int i) const;
  const Entry& basis_product(int i, int j) const { return table_[i][j]; }

  // verified on construction up to this dimension; larger tables sampled
  static constexpr int kFullAssociativityBound = 100;
  bool associativity_verified() const { return associativity_verified_; }

 private:
  void verify_associativity();

  int dim_;
  int scalar_order_;
  std::vector<Scalar> unit_;
  std::vector<std::vector<Entry>> table_;  // table_[i][j] = e_i * e_j
  std::vector<int> idempotents_;
  bool associativity_verified_ = false;
};

// The 4N-dimensional truncation of (t^e1, t^e2) with basis
// {t^k, t^k i, t^k j, t^k ij : 0 <= k < N} and t^N = 0.
FinDimAlgebra truncated_order(const QuaternionModel& m, int n_trunc);

// Basis of the Jacobson radical via the characteristic-zero trace-form
// criterion; rows are coefficient vectors.
Matrix<Scalar> radical(const FinDimAlgebra& a);

// Classify a/rad(a) by dimension, with a noncommutativity check for Mat2.
ResidueType residue_type(const FinDimAlgebra& a);

// The fiber algebra of the standard form at a ramification crossing: basis
// e_{ij}^{(alpha,beta)}, 1 <= i,j <= n, 0 <= alpha,beta < e, over Q(zeta_e).
FinDimAlgebra fiber_algebra(int n, int e);

struct Quiver {
  int vertices = 0;
  struct Arrow {
    int source, target;
    std::string name;
  };
  std::vector<Arrow> arrows;
  std::vector<std::string> relations;  // the verified relation families
};

// Gabriel quiver of the fiber algebra from rad/rad^2 dimensions between the
// distinguished idempotents, with the relation families checked inside the
// algebra (requires e >= 1; the loops exist only for e >= 2).
Quiver fiber_quiver(const FinDimAlgebra& a, int n, int e);

// number of pairwise orthogonal primitive idempotents of a/rad(a)
int max_orthogonal_idempotents(const FinDimAlgebra& a);

}  // namespace ncplane
