#include "darboux/linalg.hpp"

#include <stdexcept>

namespace darboux {

Echelon row_reduce(Matrix a) {
  Echelon out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      if (best == rows || a[r][col].complexity() < a[best][col].complexity()) best = r;
    }
    if (best == rows) continue;
    std::swap(a[row], a[best]);
    const CoeffValue inv = CoeffValue(1) / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const CoeffValue f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!a[row][j].is_zero()) a[r][j] -= f * a[row][j];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::vector<std::vector<CoeffValue>> nullspace(const Matrix& a, std::size_t columns) {
  if (!a.empty() && a.front().size() != columns) throw std::invalid_argument("column count mismatch");
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<CoeffValue>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CoeffValue> v(columns);
    v[free] = CoeffValue(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<CoeffValue>> solve(const Matrix& a, const std::vector<CoeffValue>& b, std::size_t columns) {
  if (a.size() != b.size()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (aug[r].size() != columns) throw std::invalid_argument("column count mismatch");
    aug[r].push_back(b[r]);
  }
  const Echelon e = row_reduce(std::move(aug));
  std::vector<CoeffValue> v(columns);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == columns) return std::nullopt;
    v[e.pivots[r]] = e.reduced[r][columns];
  }
  return v;
}

}  // namespace darboux
