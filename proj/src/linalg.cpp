#include "kz/linalg.hpp"

#include <stdexcept>

namespace kz {

Rref rref(RMatrix a, std::size_t cols) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k < cols; ++k)
      if (a[row][k] != 0) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[row][k] != 0) a[r][k] -= f * a[row][k];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++row;
  }
  a.resize(row);
  out.m = std::move(a);
  return out;
}

int rank(const RMatrix& a, std::size_t cols) { return static_cast<int>(rref(a, cols).pivots.size()); }

std::vector<RVector> nullspace(const RMatrix& a, std::size_t cols) {
  for (auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  Rref R = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : R.pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b, std::size_t cols) {
  RMatrix aug = a;
  if (aug.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Rref R = rref(aug, cols + 1);
  RVector x(cols, 0);
  for (std::size_t i = 0; i < R.pivots.size(); ++i) {
    if (R.pivots[i] == static_cast<int>(cols)) return std::nullopt;
    x[R.pivots[i]] = R.m[i][cols];
  }
  return x;
}

}  // namespace kz
