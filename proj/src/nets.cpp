#include "ncplane/nets.hpp"

#include <json.hpp>
#include <stdexcept>

#include "ncplane/linalg.hpp"
#include "ncplane/resultant.hpp"

namespace ncplane {

std::string to_string(CubicType t) {
  switch (t) {
    case CubicType::A: return "A";
    case CubicType::B: return "B";
    case CubicType::D: return "D";
    case CubicType::E: return "E";
    default: return "Other";
  }
}

ConicNet build_net(const Sym3& m0, const Sym3& m1, const Sym3& m2) {
  std::array<Sym3, 3> ms{m0, m1, m2};
  for (const auto& m : ms)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (m[i][j] != m[j][i]) throw std::invalid_argument("not symmetric");
  Matrix<Rational> flat(3, std::vector<Rational>(9));
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) flat[k][3 * i + j] = ms[k][i][j];
  if (rank(flat) < 3) throw std::invalid_argument("dependent net");
  return ConicNet{ms};
}

std::array<MPolyQ, 3> net_quadrics(const ConicNet& net) {
  std::array<MPolyQ, 3> q;
  for (int k = 0; k < 3; ++k) {
    MPolyQ f;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (net.m[k][i][j] == 0) continue;
        Mono m{0, 0, 0};
        m[i] += 1;
        m[j] += 1;
        f.add_term(m, net.m[k][i][j]);
      }
    q[k] = f;
  }
  return q;
}

std::array<std::array<MPolyQ, 3>, 3> net_matrix(const ConicNet& net) {
  std::array<std::array<MPolyQ, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPolyQ e;
      for (int k = 0; k < 3; ++k) {
        if (net.m[k][i][j] == 0) continue;
        Mono m{0, 0, 0};
        m[k] = 1;
        e.add_term(m, net.m[k][i][j]);
      }
      out[i][j] = e;
    }
  return out;
}

Sym3 net_matrix_at(const ConicNet& net, const std::array<Rational, 3>& p) {
  Sym3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational v = 0;
      for (int k = 0; k < 3; ++k) v += net.m[k][i][j] * p[k];
      out[i][j] = v;
    }
  return out;
}

bool is_basepoint_free(const ConicNet& net) {
  auto q = net_quadrics(net);
  SolveResult r = solve_system({q[0], q[1], q[2]});
  return r.finite && r.points.empty();
}

MPolyQ discriminant_cubic(const ConicNet& net) {
  auto m = net_matrix(net);
  MPolyQ det;
  det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det;
}

bool has_repeated_factor(const MPolyQ& f) {
  MPolyQ g = ternary_form_gcd(f, f.derivative(0));
  g = ternary_form_gcd(g, f.derivative(1));
  g = ternary_form_gcd(g, f.derivative(2));
  return g.degree() > 0;
}

SolveResult singular_points(const MPolyQ& f) {
  return solve_system({f.derivative(0), f.derivative(1), f.derivative(2)});
}

CubicType classify_cubic(const MPolyQ& delta) {
  if (delta.is_zero() || !delta.is_homogeneous() || delta.degree() != 3)
    throw std::invalid_argument("expected a nonzero homogeneous cubic");
  if (has_repeated_factor(delta)) return CubicType::Other;
  SolveResult sing = singular_points(delta);
  if (!sing.finite) return CubicType::Other;  // cannot happen for a squarefree cubic
  int n = 0;
  for (const auto& p : sing.points) {
    if (hessian_rank_at(delta, p) != 2) return CubicType::Other;  // cusp or worse
    n += p.degree();
  }
  switch (n) {
    case 0: return CubicType::A;
    case 1: return CubicType::B;
    case 2: return CubicType::D;
    case 3: return CubicType::E;
    default: return CubicType::Other;
  }
}

std::string net_to_json(const ConicNet& net) {
  nlohmann::json j;
  const char* keys[3] = {"M0", "M1", "M2"};
  for (int k = 0; k < 3; ++k) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j2 = 0; j2 < 3; ++j2) row.push_back(rational_to_string(net.m[k][i][j2]));
      rows.push_back(row);
    }
    j[keys[k]] = rows;
  }
  return j.dump();
}

ConicNet net_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("net: invalid JSON: ") + e.what());
  }
  const char* keys[3] = {"M0", "M1", "M2"};
  std::array<Sym3, 3> ms{};
  for (int k = 0; k < 3; ++k) {
    if (!j.contains(keys[k]))
      throw std::invalid_argument(std::string("net.") + keys[k] + ": missing");
    const auto& rows = j[keys[k]];
    if (!rows.is_array() || rows.size() != 3)
      throw std::invalid_argument(std::string("net.") + keys[k] + ": expected 3 rows");
    for (int i = 0; i < 3; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 3)
        throw std::invalid_argument(std::string("net.") + keys[k] + "[" + std::to_string(i) +
                                    "]: expected 3 entries");
      for (int c = 0; c < 3; ++c) {
        const auto& cell = rows[i][c];
        std::string where = std::string("net.") + keys[k] + "[" + std::to_string(i) + "][" +
                            std::to_string(c) + "]";
        try {
          if (cell.is_number_integer()) {
            ms[k][i][c] = Rational(cell.get<long long>());
          } else if (cell.is_string()) {
            ms[k][i][c] = parse_rational(cell.get<std::string>());
          } else {
            throw std::invalid_argument("expected integer or \"p/q\" string");
          }
        } catch (const std::exception& e) {
          throw std::invalid_argument(where + ": " + e.what());
        }
      }
    }
  }
  return build_net(ms[0], ms[1], ms[2]);
}

ConicNet reference_net(CubicType t) {
  auto sym = [](std::array<std::array<int, 3>, 3> v) {
    Sym3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = Rational(v[i][j]);
    return m;
  };
  switch (t) {
    case CubicType::E:
      return build_net(sym({{{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}}),
                       sym({{{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}}),
                       sym({{{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}}));
    case CubicType::D:
      return build_net(sym({{{2, 0, 0}, {0, 0, -1}, {0, -1, 0}}}),
                       sym({{{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}}),
                       sym({{{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}}));
    case CubicType::B:
      return build_net(sym({{{2, 0, 0}, {0, 0, -1}, {0, -1, 0}}}),
                       sym({{{0, 0, -1}, {0, 2, 0}, {-1, 0, 0}}}),
                       sym({{{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}}));
    case CubicType::A:
      // lambda = 2 in the one-parameter family
      return build_net(sym({{{2, 0, 0}, {0, 0, -2}, {0, -2, 0}}}),
                       sym({{{0, 0, -2}, {0, 2, 0}, {-2, 0, 0}}}),
                       sym({{{0, -2, 0}, {-2, 0, 0}, {0, 0, 2}}}));
    default:
      throw std::invalid_argument("no reference net for this type");
  }
}

}  // namespace ncplane
