#include "polysemi/linalg.hpp"

#include <cassert>

namespace polysemi {

int row_reduce(QMat& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

int rank(QMat m) { return row_reduce(m); }

std::optional<QVec> solve(QMat a, const QVec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots;
  int r = row_reduce(a, &pivots);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivots[i]] = a[i][cols];
  return x;
}

QMat kernel(QMat a, int cols) {
  std::vector<int> pivots;
  int r = row_reduce(a, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rat(0));
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(QMat a) {
  const int n = static_cast<int>(a.size());
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) { piv = i; break; }
    }
    if (piv < 0) return Rat(0);
    if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
    det *= a[c][c];
    Rat inv = 1 / a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] * inv;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& a, int n) {
  // Unimodular column reduction; the transform columns over zeroed-out
  // matrix columns form a basis of the kernel lattice.
  std::vector<std::vector<Int>> m = a;
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));  // u[j] is column j
  for (int j = 0; j < n; ++j) u[j][j] = 1;
  std::vector<bool> active(n, true);

  auto col_sub = [&](int dst, int src, const Int& q) {
    for (auto& row : m) row[dst] -= q * row[src];
    for (int i = 0; i < n; ++i) u[dst][i] -= q * u[src][i];
  };

  for (size_t i = 0; i < m.size(); ++i) {
    for (;;) {
      int jmin = -1;
      int count = 0;
      for (int j = 0; j < n; ++j) {
        if (!active[j] || m[i][j] == 0) continue;
        ++count;
        if (jmin < 0 || cmp(abs(m[i][j]), abs(m[i][jmin])) < 0) jmin = j;
      }
      if (count <= 1) {
        if (count == 1) active[jmin] = false;
        break;
      }
      for (int j = 0; j < n; ++j) {
        if (j == jmin || !active[j] || m[i][j] == 0) continue;
        Int q = m[i][j] / m[i][jmin];  // truncated division
        if (q != 0) col_sub(j, jmin, q);
      }
    }
  }

  std::vector<std::vector<Int>> basis;
  for (int j = 0; j < n; ++j) {
    if (!active[j]) continue;
    bool zero = true;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i][j] != 0) { zero = false; break; }
    }
    if (zero) basis.push_back(u[j]);
  }
  return basis;
}

}  // namespace polysemi
