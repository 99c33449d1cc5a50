#pragma once

#include <cstddef>
#include <vector>

#include "df/integer_matrix.hpp"

namespace df {

/// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ... , all d_i >= 0.
struct SmithDecomposition {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;
};

/// Dense Smith normal form with transforms. Pivoting on the smallest nonzero
/// magnitude, reducing with Euclidean division; entries may grow, so all
/// arithmetic is arbitrary precision.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Nonzero diagonal entries of the Smith form, without computing transforms.
std::vector<Int> smith_diagonal(IntegerMatrix m);

struct InvariantFactors {
  std::size_t rank = 0;
  /// Invariant factors greater than one, in divisibility order.
  std::vector<Int> torsion;
};

/// Rank and nontrivial invariant factors of a sparse matrix. Eliminates unit
/// pivots sparsely (Markowitz order), then finishes the residual block densely.
InvariantFactors invariant_factors(const SparseMatrix& m);

}  // namespace df
