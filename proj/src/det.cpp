#include "darboux/det.hpp"

#include <stdexcept>

namespace darboux {

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t l = m.size();
  if (l == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != l) throw std::invalid_argument("determinant of a non-square matrix");
  const Coordinates& coords = m[0][0].coordinates();
  for (const auto& row : m)
    for (const auto& e : row)
      if (!(e.coordinates() == coords)) throw CoordinateMismatch("matrix entries over different coordinates");

  if (l == 1) return m[0][0];
  if (l == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];

  PolyMatrix a = m;
  MultiPoly prev = MultiPoly::constant(coords, CoeffValue(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < l; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < l && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == l) return MultiPoly(coords);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < l; ++i) {
      for (std::size_t j = k + 1; j < l; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(num, prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[l - 1][l - 1] : a[l - 1][l - 1];
}

}  // namespace darboux
