#pragma once

#include <string>
#include <vector>

#include "conic_types.hpp"
#include "nets.hpp"

namespace ncplane {

// A pencil of conics s A + t B given by two independent symmetric matrices.
struct Pencil {
  Sym3 a, b;
};

// One root cluster of the determinant with its partition of elementary
// divisor multiplicities (stored decreasing).
struct SegreGroup {
  MPolyQ root_form;            // irreducible binary form in (s, t)
  std::vector<int> partition;  // decreasing, sums to the multiplicity in det
};

// Segre symbol of a pencil of conics.  For pencils with identically singular
// determinant the symbol degenerates to a rank profile.
struct SegreSymbol {
  bool degenerate = false;
  std::vector<SegreGroup> groups;  // regular case only

  // degenerate case: generic rank and the loci of further rank drop
  int generic_rank = 0;
  MPolyQ rank_le1_locus;  // gcd of the 2x2 minors, normalized; 0 if rank <= 1
  MPolyQ rank_le0_locus;  // gcd of the entries, normalized; 0 if pencil is 0
};

// Restriction of a net to the pencil over the line V(f), f linear.
Pencil restrict_net_to_pencil(const ConicNet& net, const MPolyQ& f);

Pencil make_pencil(const Sym3& a, const Sym3& b);

// Invariant-factor computation: d_k = gcd of the k x k minors of s A + t B.
SegreSymbol segre_symbol(const Pencil& p);

// Partitions per geometric root (clusters expanded by degree), sorted
// canonically: by partition sum descending, then lexicographically descending.
std::vector<std::vector<int>> expanded_partitions(const SegreSymbol& s);

// Bracket notation: "[1,1,1]", "[(1,1),1]", "[1,1;;1]", ...
std::string to_string(const SegreSymbol& s);

// The dictionary from Segre symbols to the six types; throws
// "excluded by basepoint-freeness" for symbols no basepoint-free net yields.
ConicTypeLabel type_from_segre(const SegreSymbol& s);

}  // namespace ncplane
