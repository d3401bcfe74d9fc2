#include "ncplane/plane_solve.hpp"

#include <stdexcept>

#include "ncplane/factor.hpp"
#include "ncplane/linalg.hpp"
#include "ncplane/resultant.hpp"

namespace ncplane {

namespace {

// Shear z0 -> z0 + a*z2, z1 -> z1 + b*z2.
MPolyQ shear(const MPolyQ& f, int a, int b) {
  MPolyQ z0 = MPolyQ::variable(0), z1 = MPolyQ::variable(1), z2 = MPolyQ::variable(2);
  return f.substitute({z0 + Rational(a) * z2, z1 + Rational(b) * z2, z2});
}

const std::vector<std::pair<int, int>>& shear_candidates() {
  static const std::vector<std::pair<int, int>> c = [] {
    std::vector<std::pair<int, int>> v;
    for (int n = 0; n <= 6; ++n)
      for (int a = -n; a <= n; ++a)
        for (int b = -n; b <= n; ++b)
          if (std::max(std::abs(a), std::abs(b)) == n) v.emplace_back(a, b);
    return v;
  }();
  return c;
}

// Specialize a form at (z0, z1) = (s0, s1) over K, as a polynomial in z2.
UPoly<NFElem> specialize(const MPolyQ& f, const NFElem& s0, const NFElem& s1) {
  auto coeffs = f.coefficients_in(2);
  std::vector<NFElem> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    NFElem acc(0);
    for (auto& [m, co] : c.terms()) acc = acc + NFElem(co) * s0.pow(m[0]) * s1.pow(m[1]);
    out.push_back(acc);
  }
  return UPoly<NFElem>(std::move(out));
}

struct ShearAttempt {
  bool ok = false;
  std::vector<AlgebraicPointSet> points;
};

ShearAttempt try_shear(const MPolyQ& f, const MPolyQ& g, int a, int b) {
  ShearAttempt out;
  if (f.eval({Rational(a), Rational(b), Rational(1)}) == 0) return out;
  if (g.eval({Rational(a), Rational(b), Rational(1)}) == 0) return out;
  MPolyQ fs = shear(f, a, b);
  MPolyQ gs = shear(g, a, b);
  MPolyQ res = resultant(fs, gs, 2);
  if (res.is_zero()) throw std::invalid_argument("forms share a common factor");
  BinaryFactorization bf = factor_binary_form(res);
  std::vector<AlgebraicPointSet> pts;
  for (auto& [h, mult] : bf.factors) {
    NFElem s0, s1;
    NFElem::Modulus mod;
    if (h.degree_in(0) == 0) {  // the factor t: projection point (1 : 0)
      s0 = NFElem(1);
      s1 = NFElem(0);
    } else {
      mod = cluster_residue_field(h);
      if (!mod) {
        Rational ca = h.coeff(Mono{1, 0, 0});
        Rational cb = h.coeff(Mono{0, 1, 0});
        s0 = NFElem(-cb / ca);
        s1 = NFElem(1);
      } else {
        s0 = NFElem::generator(mod);
        s1 = NFElem(1);
      }
    }
    UPoly<NFElem> fbar = specialize(fs, s0, s1);
    UPoly<NFElem> gbar = specialize(gs, s0, s1);
    UPoly<NFElem> d = gcd(fbar, gbar);
    if (d.deg() < 1) throw std::logic_error("resultant root without common zero");
    UPoly<NFElem> ds = d / gcd(d, d.derivative());
    if (ds.deg() != 1) return out;  // shear does not separate; try another
    NFElem w = -ds.coeff(0) / ds.coeff(1);
    // a sheared zero (s0, s1, w) is the original zero (s0 + a w, s1 + b w, w)
    NFElem x0 = s0 + NFElem(Rational(a)) * w;
    NFElem x1 = s1 + NFElem(Rational(b)) * w;
    AlgebraicPointSet pt;
    pt.minpoly = mod ? *mod : UPolyQ::x();
    pt.coords = {x0.rep(), x1.rep(), w.rep()};
    pt.multiplicity = mult;
    pts.push_back(std::move(pt));
  }
  out.ok = true;
  out.points = std::move(pts);
  return out;
}

}  // namespace

bool forms_share_factor(const MPolyQ& f, const MPolyQ& g) {
  if (f.is_zero() || g.is_zero()) return true;
  if (f.degree() == 0 || g.degree() == 0) return false;
  return ternary_form_gcd(f, g).degree() > 0;
}

SolveResult solve_pair(const MPolyQ& f, const MPolyQ& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero form");
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw std::invalid_argument("expected homogeneous forms");
  for (auto [a, b] : shear_candidates()) {
    ShearAttempt at = try_shear(f, g, a, b);
    if (at.ok) {
      SolveResult r;
      r.points = std::move(at.points);
      return r;
    }
  }
  throw std::logic_error("no separating shear found");
}

NFElem value_at(const MPolyQ& f, const AlgebraicPointSet& p) {
  NFElem::Modulus mod;
  if (p.minpoly.deg() > 1) mod = std::make_shared<UPolyQ>(p.minpoly);
  NFElem x0(mod, p.coords[0]), x1(mod, p.coords[1]), x2(mod, p.coords[2]);
  NFElem acc(0);
  for (auto& [m, co] : f.terms())
    acc = acc + NFElem(co) * x0.pow(m[0]) * x1.pow(m[1]) * x2.pow(m[2]);
  return acc;
}

bool vanishes_at(const MPolyQ& f, const AlgebraicPointSet& p) { return value_at(f, p).is_zero(); }

int hessian_rank_at(const MPolyQ& f, const AlgebraicPointSet& p) {
  NFElem::Modulus mod;
  if (p.minpoly.deg() > 1) mod = std::make_shared<UPolyQ>(p.minpoly);
  NFElem x0(mod, p.coords[0]), x1(mod, p.coords[1]), x2(mod, p.coords[2]);
  Matrix<NFElem> h(3, std::vector<NFElem>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPolyQ hij = f.derivative(i).derivative(j);
      NFElem acc(0);
      for (auto& [m, co] : hij.terms())
        acc = acc + NFElem(co) * x0.pow(m[0]) * x1.pow(m[1]) * x2.pow(m[2]);
      h[i][j] = acc;
    }
  return rank(h);
}

SolveResult solve_system(const std::vector<MPolyQ>& forms_in) {
  std::vector<MPolyQ> forms;
  for (const auto& f : forms_in)
    if (!f.is_zero()) forms.push_back(f);
  if (forms.empty()) throw std::invalid_argument("no nonzero forms");
  for (const auto& f : forms)
    if (f.degree() == 0) return SolveResult{true, {}};  // a nonzero constant: empty locus
  if (forms.size() == 1) return SolveResult{false, {}};

  // a common factor across all forms means a positive-dimensional locus
  MPolyQ g = forms[0];
  for (std::size_t i = 1; i < forms.size(); ++i) g = ternary_form_gcd(g, forms[i]);
  if (g.degree() > 0) return SolveResult{false, {}};

  auto coprime = [](const MPolyQ& a, const MPolyQ& b) {
    return ternary_form_gcd(a, b).degree() == 0;
  };

  MPolyQ u, v;
  bool found = false;
  for (std::size_t i = 0; i < forms.size() && !found; ++i)
    for (std::size_t j = i + 1; j < forms.size() && !found; ++j)
      if (coprime(forms[i], forms[j])) {
        u = forms[i];
        v = forms[j];
        found = true;
      }
  if (!found) {
    // mix in the last form to break factors shared within pairs
    const MPolyQ& w = forms.back();
    for (int lam = 1; lam <= 8 && !found; ++lam)
      for (int mu = lam + 1; mu <= lam + 8 && !found; ++mu) {
        MPolyQ cu = forms[0] + Rational(lam) * w;
        MPolyQ cv = forms[1] + Rational(mu) * w;
        if (!cu.is_zero() && !cv.is_zero() && coprime(cu, cv)) {
          u = cu;
          v = cv;
          found = true;
        }
      }
  }
  if (!found) throw std::logic_error("could not isolate a finite subsystem");

  SolveResult pair = solve_pair(u, v);
  SolveResult out;
  for (auto& pt : pair.points) {
    bool all = true;
    for (const auto& f : forms)
      if (!vanishes_at(f, pt)) {
        all = false;
        break;
      }
    if (all) out.points.push_back(pt);
  }
  return out;
}

}  // namespace ncplane
