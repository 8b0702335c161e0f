#pragma once

#include "darboux/multipoly.hpp"

#include <vector>

namespace darboux {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant. Sizes 1 and 2 are expanded directly, larger matrices use
/// Bareiss fraction-free elimination with exact polynomial division.
/// Throws std::invalid_argument for empty or non-square input.
MultiPoly determinant(const PolyMatrix& m);

}  // namespace darboux
