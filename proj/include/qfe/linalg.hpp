#pragma once

#include <vector>

#include "qfe/poly.hpp"

namespace qfe {

using PolyVector = std::vector<PolyXQ>;
using PolyMatrix = std::vector<PolyVector>;

/// Reduced row echelon form computed without fractions.
///
/// Every pivot entry equals `scale` and every other entry of a pivot column is
/// zero; rows past `pivots.size()` are zero.
struct FractionFreeRref {
  PolyMatrix rows;
  std::vector<int> pivots;  // pivot column of row i
  PolyXQ scale{1};

  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Bareiss-style Gauss-Jordan elimination over Z[x, q, 1/q]. Columns are
/// scanned left to right; the pivot is the sparsest candidate entry, ties going
/// to the lowest row. Throws std::logic_error if a division is ever inexact.
FractionFreeRref fraction_free_rref(PolyMatrix a, int ncols);

/// Polynomial basis of {v : a v = 0}, one vector per free column in increasing
/// column order, each made primitive.
std::vector<PolyVector> nullspace(const PolyMatrix& a, int ncols,
                                  std::vector<int>* free_columns = nullptr);

/// Divides out the gcd of the entries (integer content and monomial factor
/// included) and makes the first non-zero entry's leading coefficient positive.
PolyVector make_primitive(PolyVector v);

}  // namespace qfe
