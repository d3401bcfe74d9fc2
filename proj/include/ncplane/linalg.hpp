#pragma once

#include <vector>

namespace ncplane {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (!(m[r][col] == K(0))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    K inv = K(1) / m[row][col];
    for (int c = 0; c < cols; ++c) m[row][c] = inv * m[row][c];
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == K(0)) continue;
      K f = m[r][col];
      for (int c = 0; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
int rank(Matrix<K> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right nullspace (vectors v with M v = 0), one row per vector.
template <class K>
Matrix<K> nullspace(Matrix<K> m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix<K> basis;
  for (int col = 0; col < cols; ++col) {
    if (is_pivot[col]) continue;
    std::vector<K> v(cols, K(0));
    v[col] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row space basis (the nonzero rows of the reduced form).
template <class K>
Matrix<K> row_basis(Matrix<K> m) {
  std::vector<int> pivots = rref(m);
  m.resize(pivots.size());
  return m;
}

// Is v in the row space of basis (basis assumed from row_basis, i.e. RREF)?
template <class K>
bool in_row_space(const Matrix<K>& rref_basis, std::vector<K> v) {
  if (rref_basis.empty()) {
    for (auto& x : v)
      if (!(x == K(0))) return false;
    return true;
  }
  const int cols = static_cast<int>(v.size());
  for (const auto& row : rref_basis) {
    int lead = -1;
    for (int c = 0; c < cols; ++c)
      if (!(row[c] == K(0))) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    if (v[lead] == K(0)) continue;
    K f = v[lead];
    for (int c = 0; c < cols; ++c) v[c] = v[c] - f * row[c];
  }
  for (auto& x : v)
    if (!(x == K(0))) return false;
  return true;
}

}  // namespace ncplane
