#pragma once

#include <array>
#include <string>

#include "mpoly.hpp"
#include "plane_solve.hpp"

namespace ncplane {

using Sym3 = std::array<std::array<Rational, 3>, 3>;

// A net of conics M(z) = M0 z0 + M1 z1 + M2 z2 given by three linearly
// independent symmetric 3x3 matrices.
struct ConicNet {
  std::array<Sym3, 3> m;
};

enum class CubicType { A, B, D, E, Other };

std::string to_string(CubicType t);

// Validates symmetry and linear independence.
ConicNet build_net(const Sym3& m0, const Sym3& m1, const Sym3& m2);

// The three quadratic forms x^T M_i x of the net.
std::array<MPolyQ, 3> net_quadrics(const ConicNet& net);

// M(z) as a matrix of linear forms in z0, z1, z2.
std::array<std::array<MPolyQ, 3>, 3> net_matrix(const ConicNet& net);

// M(p) for a rational point.
Sym3 net_matrix_at(const ConicNet& net, const std::array<Rational, 3>& p);

// True iff the three quadrics have no common projective zero over the
// algebraic closure.
bool is_basepoint_free(const ConicNet& net);

// det M(z), a homogeneous cubic: the discriminant of the net.
MPolyQ discriminant_cubic(const ConicNet& net);

// Classification of a plane cubic by its singular points: A smooth, B one
// node (irreducible nodal cubic), D two nodes (smooth conic and a transverse
// line), E three nodes (a triangle of lines); everything else is Other.
CubicType classify_cubic(const MPolyQ& delta);

// The singular points of a squarefree plane curve of any degree.
SolveResult singular_points(const MPolyQ& f);

// Does the form have a repeated factor?
bool has_repeated_factor(const MPolyQ& f);

// JSON (de)serialization with rationals as "p/q" strings.
std::string net_to_json(const ConicNet& net);
ConicNet net_from_json(const std::string& text);

// The four reference nets, one per discriminant type (E, D, B, A); the last
// one takes the parameter value lambda = 2.
ConicNet reference_net(CubicType t);

}  // namespace ncplane
