#pragma once

#include "qsuper/phase.hpp"

#include <cstddef>
#include <vector>

namespace qsuper {

using ScalarMatrix = std::vector<std::vector<PhaseScalar>>;

/// Basis of { x : M x = 0 } over the fraction field.
///
/// Rows are cleared of denominators, then reduced by fraction-free
/// Gauss-Jordan elimination (row_k <- a * row_k - b * row_pivot), choosing
/// the pivot with the fewest monomials. One basis vector per free column,
/// scaled so that its first nonzero entry is 1. Vectors are ordered by their
/// free column.
std::vector<std::vector<PhaseScalar>> nullspace(const ScalarMatrix& rows, std::size_t columns, std::size_t arity);

}  // namespace qsuper
