#pragma once

#include <vector>

#include "conjdim/rational.hpp"

namespace conjdim {

using IntMatrix = std::vector<std::vector<Integer>>;

/// LLL-reduces the rows of `basis` in place (rows must be linearly
/// independent).  The basis stays exact; Gram-Schmidt data is kept in
/// floating point with precision scaled to the entry sizes.
void lll_reduce(IntMatrix& basis, double delta = 0.99);

/// Rank over Q by fraction-free elimination.
int integer_rank(const IntMatrix& m);

/// Reduced row echelon form over Q of the row space, zero rows dropped.
std::vector<std::vector<Rational>> rational_rref(const std::vector<std::vector<Rational>>& rows);

}  // namespace conjdim
