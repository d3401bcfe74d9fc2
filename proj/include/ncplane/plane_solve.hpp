#pragma once

#include <array>
#include <vector>

#include "cluster.hpp"
#include "numberfield.hpp"

namespace ncplane {

// A Galois orbit of projective points with coordinates in Q[u]/(minpoly).
struct AlgebraicPointSet {
  UPolyQ minpoly;               // monic irreducible; degree = number of points
  std::array<UPolyQ, 3> coords;  // representative coordinates modulo minpoly
  int multiplicity = 1;          // intersection multiplicity for pair solves

  int degree() const { return minpoly.deg(); }
};

struct SolveResult {
  bool finite = true;  // false: the common zero locus is positive-dimensional
  std::vector<AlgebraicPointSet> points;
};

// Common projective zeros of two ternary forms without common factor.
SolveResult solve_pair(const MPolyQ& f, const MPolyQ& g);

// Common projective zeros of two or three ternary forms; detects a
// positive-dimensional locus.
SolveResult solve_system(const std::vector<MPolyQ>& forms);

// Value of a ternary polynomial at the point, as an element of Q[u]/(minpoly).
NFElem value_at(const MPolyQ& f, const AlgebraicPointSet& p);
bool vanishes_at(const MPolyQ& f, const AlgebraicPointSet& p);

// Rank of the Hessian matrix of a form at the point.
int hessian_rank_at(const MPolyQ& f, const AlgebraicPointSet& p);

// Do the two ternary forms share a nonconstant factor?
bool forms_share_factor(const MPolyQ& f, const MPolyQ& g);

}  // namespace ncplane
