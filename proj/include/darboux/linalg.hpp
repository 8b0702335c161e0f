#pragma once

#include "darboux/coeff.hpp"

#include <optional>
#include <vector>

namespace darboux {

using Matrix = std::vector<std::vector<CoeffValue>>;

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the coefficient field. Among candidate pivots
/// the entry with the smallest representation is chosen to limit growth.
Echelon row_reduce(Matrix a);
std::size_t rank(const Matrix& a);
/// Basis of {v : a*v = 0}; `columns` is needed when `a` has no rows.
std::vector<std::vector<CoeffValue>> nullspace(const Matrix& a, std::size_t columns);
/// One solution of a*v = b (free variables set to zero), or nullopt.
std::optional<std::vector<CoeffValue>> solve(const Matrix& a, const std::vector<CoeffValue>& b, std::size_t columns);

}  // namespace darboux
