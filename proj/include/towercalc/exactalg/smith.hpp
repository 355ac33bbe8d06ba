#pragma once

#include "towercalc/exactalg/integer_matrix.hpp"

#include <cstddef>

namespace towercalc::exactalg {

/// U * M * V = diag(diagonal), with U, V unimodular.
///
/// `diagonal` has min(rows, cols) entries, nonnegative, nonzero entries
/// first and each dividing the next. The inverses of U and V are tracked
/// alongside so subgroup generators can be read off without a second solve.
struct SnfDecomposition {
  IntegerVector diagonal;
  IntegerMatrix left;           // U, rows x rows
  IntegerMatrix right;          // V, cols x cols
  IntegerMatrix left_inverse;   // U^-1
  IntegerMatrix right_inverse;  // V^-1

  /// Number of nonzero invariants.
  std::size_t rank() const;
};

/// Smith normal form by smallest-magnitude pivoting with gcd reduction.
/// Total on all integer matrices, including empty ones.
SnfDecomposition smith_normal_form(const IntegerMatrix& m);

}  // namespace towercalc::exactalg
