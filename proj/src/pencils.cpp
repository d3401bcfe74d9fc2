#include "ncplane/pencils.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncplane/factor.hpp"
#include "ncplane/linalg.hpp"
#include "ncplane/lines.hpp"
#include "ncplane/resultant.hpp"

namespace ncplane {

namespace {

bool divides(const MPolyQ& d, const MPolyQ& p) {
  if (p.is_zero()) return true;
  try {
    exact_divide(p, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

int multiplicity_in(const MPolyQ& theta, MPolyQ p) {
  int v = 0;
  while (!p.is_zero() && p.degree() >= theta.degree() && divides(theta, p)) {
    p = exact_divide(p, theta);
    ++v;
  }
  return v;
}

MPolyQ normalize_lead(const MPolyQ& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.lead().second) * p;
}

// s A + t B as a matrix of binary linear forms.
std::array<std::array<MPolyQ, 3>, 3> pencil_matrix(const Pencil& p) {
  MPolyQ s = MPolyQ::variable(0), t = MPolyQ::variable(1);
  std::array<std::array<MPolyQ, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = p.a[i][j] * s + p.b[i][j] * t;
  return m;
}

MPolyQ det3(const std::array<std::array<MPolyQ, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<MPolyQ> minors2(const std::array<std::array<MPolyQ, 3>, 3>& m) {
  std::vector<MPolyQ> out;
  for (int i0 = 0; i0 < 3; ++i0)
    for (int i1 = i0 + 1; i1 < 3; ++i1)
      for (int j0 = 0; j0 < 3; ++j0)
        for (int j1 = j0 + 1; j1 < 3; ++j1)
          out.push_back(m[i0][j0] * m[i1][j1] - m[i0][j1] * m[i1][j0]);
  return out;
}

MPolyQ gcd_list(const std::vector<MPolyQ>& ps) {
  MPolyQ g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p : ternary_form_gcd(g, p);
    if (g.degree() == 0) break;
  }
  return normalize_lead(g);
}

bool partition_greater(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (int x : a) sa += x;
  for (int x : b) sb += x;
  if (sa != sb) return sa > sb;
  return a > b;  // lexicographic on the decreasing representations
}

}  // namespace

Pencil make_pencil(const Sym3& a, const Sym3& b) {
  Matrix<Rational> flat(2, std::vector<Rational>(9));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      flat[0][3 * i + j] = a[i][j];
      flat[1][3 * i + j] = b[i][j];
    }
  if (rank(flat) < 2) throw std::invalid_argument("dependent pencil");
  return Pencil{a, b};
}

Pencil restrict_net_to_pencil(const ConicNet& net, const MPolyQ& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 1)
    throw std::invalid_argument("expected a nonzero linear form");
  auto pts = line_basis_points(f);
  return make_pencil(net_matrix_at(net, pts[0]), net_matrix_at(net, pts[1]));
}

SegreSymbol segre_symbol(const Pencil& p) {
  auto m = pencil_matrix(p);
  MPolyQ d3 = det3(m);
  SegreSymbol out;
  std::vector<MPolyQ> entries;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) entries.push_back(m[i][j]);
  if (d3.is_zero()) {
    out.degenerate = true;
    auto mins = minors2(m);
    bool some_minor = false;
    for (const auto& q : mins)
      if (!q.is_zero()) some_minor = true;
    out.generic_rank = some_minor ? 2 : 1;
    out.rank_le1_locus = some_minor ? gcd_list(mins) : MPolyQ();
    out.rank_le0_locus = gcd_list(entries);
    return out;
  }
  d3 = normalize_lead(d3);
  MPolyQ d1 = gcd_list(entries);
  if (d1.is_zero() || d1.degree() == 0) d1 = MPolyQ::constant(Rational(1));
  MPolyQ d2 = gcd_list(minors2(m));
  if (d2.is_zero() || d2.degree() == 0) d2 = MPolyQ::constant(Rational(1));
  if (!divides(d1, d2) || !divides(d2, d3))
    throw std::logic_error("invariant factors do not divide");
  BinaryFactorization bf = factor_binary_form(d3);
  for (auto& [theta, e3] : bf.factors) {
    int v1 = multiplicity_in(theta, d1);
    int v2 = multiplicity_in(theta, d2);
    std::vector<int> part;
    if (e3 - v2 > 0) part.push_back(e3 - v2);
    if (v2 - v1 > 0) part.push_back(v2 - v1);
    if (v1 > 0) part.push_back(v1);
    std::sort(part.rbegin(), part.rend());
    SegreGroup g;
    g.root_form = theta;
    g.partition = std::move(part);
    out.groups.push_back(std::move(g));
  }
  std::sort(out.groups.begin(), out.groups.end(), [](const SegreGroup& a, const SegreGroup& b) {
    if (a.partition != b.partition) return partition_greater(a.partition, b.partition);
    return mpoly_less(a.root_form, b.root_form);
  });
  return out;
}

std::vector<std::vector<int>> expanded_partitions(const SegreSymbol& s) {
  if (s.degenerate) throw std::logic_error("degenerate symbol has no partition list");
  std::vector<std::vector<int>> out;
  for (const auto& g : s.groups)
    for (int i = 0; i < g.root_form.degree(); ++i) out.push_back(g.partition);
  std::sort(out.begin(), out.end(), partition_greater);
  return out;
}

std::string to_string(const SegreSymbol& s) {
  if (s.degenerate) {
    // the one degenerate shape a net can produce: generic rank 2 dropping to
    // rank 1 at two distinct points, never to rank 0
    bool rank0_trivial = s.rank_le0_locus.is_zero() || s.rank_le0_locus.degree() == 0;
    if (s.generic_rank == 2 && rank0_trivial && !s.rank_le1_locus.is_zero() &&
        s.rank_le1_locus.degree() == 2) {
      auto sq = factor_binary_form(s.rank_le1_locus);
      bool squarefree = true;
      for (auto& [f, e] : sq.factors)
        if (e > 1) squarefree = false;
      if (squarefree) return "[1,1;;1]";
    }
    std::string r = "[degenerate: generic rank " + std::to_string(s.generic_rank);
    if (!s.rank_le1_locus.is_zero() && s.rank_le1_locus.degree() > 0)
      r += ", rank<=1 on " + s.rank_le1_locus.to_string(vars_st());
    if (!s.rank_le0_locus.is_zero() && s.rank_le0_locus.degree() > 0)
      r += ", rank 0 on " + s.rank_le0_locus.to_string(vars_st());
    return r + "]";
  }
  std::string r = "[";
  bool first = true;
  for (const auto& part : expanded_partitions(s)) {
    if (!first) r += ",";
    first = false;
    if (part.size() == 1) {
      r += std::to_string(part[0]);
    } else {
      r += "(";
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(part[i]);
      }
      r += ")";
    }
  }
  return r + "]";
}

ConicTypeLabel type_from_segre(const SegreSymbol& s) {
  if (s.degenerate) {
    if (to_string(s) == "[1,1;;1]") return ConicTypeLabel::T4;
    throw std::invalid_argument("excluded by basepoint-freeness");
  }
  auto parts = expanded_partitions(s);
  auto is = [&](const std::vector<std::vector<int>>& want) { return parts == want; };
  if (is({{1}, {1}, {1}})) return ConicTypeLabel::T1;
  if (is({{2}, {1}})) return ConicTypeLabel::T2a;
  if (is({{1, 1}, {1}})) return ConicTypeLabel::T2b;
  if (is({{3}})) return ConicTypeLabel::T3a;
  if (is({{2, 1}})) return ConicTypeLabel::T3b;
  throw std::invalid_argument("excluded by basepoint-freeness");
}

}  // namespace ncplane
