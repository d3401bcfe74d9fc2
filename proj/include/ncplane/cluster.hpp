#pragma once

#include <array>
#include <optional>
#include <string>

#include "factor.hpp"
#include "numberfield.hpp"

namespace ncplane {

// Remainder of a binary form F(s,t) modulo an irreducible binary form c(s,t),
// dividing out the leading s-power of c.  The result is homogeneous of the
// same degree as F with s-degree below deg_s(c); it vanishes iff c divides F.
inline MPolyQ reduce_binary_mod(const MPolyQ& f, const MPolyQ& c) {
  if (c.is_zero()) throw std::invalid_argument("zero modulus");
  int dc = c.degree_in(0);
  if (dc == 0) {
    // c is (a multiple of) t: reduce means drop all terms divisible by t
    MPolyQ r;
    for (auto& [m, co] : f.terms())
      if (m[1] == 0) r.add_term(m, co);
    return r;
  }
  auto cs = c.coefficients_in(0);
  Rational lead = cs[dc].is_zero() ? Rational(0) : cs[dc].lead().second;
  MPolyQ r = f;
  while (!r.is_zero() && r.degree_in(0) >= dc) {
    int dr = r.degree_in(0);
    auto rc = r.coefficients_in(0);
    MPolyQ top = rc[dr];  // polynomial in t
    Mono shift{dr - dc, 0, 0};
    r = r - (Rational(1) / lead) * (MPolyQ::term(shift, Rational(1)) * top * c);
  }
  return r;
}

// A Galois-stable cluster of points, either on a parametrized line/conic
// (irreducible binary form in the parameter) or as an algebraic point with
// coordinates in Q[u]/(minpoly).
struct PointCluster {
  // parametrized flavour
  std::optional<std::array<MPolyQ, 3>> parametrization;  // binary forms in (s,t)
  MPolyQ param_form;                                     // irreducible binary form, monic in s
  // algebraic point flavour
  std::optional<UPolyQ> minpoly;           // irreducible monic over Q
  std::array<UPolyQ, 3> coords;            // coordinates modulo minpoly

  int multiplicity = 1;
  int degree = 1;  // number of geometric points in the cluster

  bool parametrized() const { return parametrization.has_value(); }
};

// Pull back f along the cluster's parametrization and reduce modulo the
// cluster form; zero iff f vanishes at every geometric point of the cluster.
inline MPolyQ eval_mod_cluster(const MPolyQ& f, const PointCluster& c) {
  if (c.parametrized()) {
    const auto& pr = *c.parametrization;
    MPolyQ pulled = f.substitute({pr[0], pr[1], pr[2]});
    return reduce_binary_mod(pulled, c.param_form);
  }
  if (!c.minpoly) throw std::invalid_argument("cluster has no representation");
  // evaluate at the algebraic point; encode the residue as a polynomial in s
  UPolyQ acc;
  NFElem::Modulus mod = std::make_shared<UPolyQ>(*c.minpoly);
  NFElem x0(mod, c.coords[0]), x1(mod, c.coords[1]), x2(mod, c.coords[2]);
  NFElem val(0);
  for (auto& [m, co] : f.terms()) {
    NFElem term(mod, UPolyQ::constant(co));
    term = term * x0.pow(m[0]) * x1.pow(m[1]) * x2.pow(m[2]);
    val = val + term;
  }
  return MPolyQ::from_univariate(val.rep(), 0);
}

// True iff f vanishes on the whole cluster.
inline bool vanishes_on_cluster(const MPolyQ& f, const PointCluster& c) {
  return eval_mod_cluster(f, c).is_zero();
}

// Residue field of a parametrized cluster: dehomogenization of the cluster
// form (the form t gives the rational point at parameter infinity).
inline NFElem::Modulus cluster_residue_field(const MPolyQ& form) {
  int ds = form.degree_in(0);
  if (ds == 0) return nullptr;  // point (1:0); rational
  std::vector<Rational> c(ds + 1, Rational(0));
  for (auto& [m, co] : form.terms()) c[m[0]] = co;
  UPolyQ p = UPolyQ(std::move(c)).monic();
  if (p.deg() == 1) return nullptr;  // rational point
  return std::make_shared<UPolyQ>(p);
}

// Parameter coordinates (s, t) of a parametrized cluster over its residue
// field: (u, 1) in general, (1, 0) for the infinity cluster.
inline std::pair<NFElem, NFElem> cluster_parameter(const MPolyQ& form) {
  int ds = form.degree_in(0);
  if (ds == 0) return {NFElem(1), NFElem(0)};
  auto mod = cluster_residue_field(form);
  if (!mod) {
    // rational root of a linear form a*s + b*t
    Rational a = form.coeff(Mono{1, 0, 0});
    Rational b = form.coeff(Mono{0, 1, 0});
    return {NFElem(-b / a), NFElem(1)};
  }
  return {NFElem::generator(mod), NFElem(1)};
}

}  // namespace ncplane
