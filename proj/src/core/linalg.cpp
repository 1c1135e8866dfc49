#include "core/linalg.hpp"

#include <utility>

namespace toricq {

Scalar dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::Internal, "dot: dimension mismatch");
  Scalar acc;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(Mat& a, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(a.size()); ++col) {
    int pr = -1;
    for (int r = row; r < static_cast<int>(a.size()); ++r) {
      if (!a[r][col].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    const Scalar inv = Scalar(1) / a[row][col];
    for (int c = col; c < ncols; ++c) a[row][c] *= inv;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (int c = col; c < ncols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<Vec> solve_square(Mat a, Vec b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  const std::vector<int> pivots = rref(a, n + 1);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() == n))
    return std::nullopt;
  Vec x(n);
  for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

int rank(Mat a) {
  if (a.empty()) return 0;
  const int ncols = static_cast<int>(a[0].size());
  return static_cast<int>(rref(a, ncols).size());
}

Mat nullspace(Mat a, int ncols) {
  if (a.empty()) a.push_back(Vec(ncols));
  const std::vector<int> pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (int col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    Vec v(ncols);
    v[col] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace toricq
