#pragma once

#include "towercalc/exactalg/integer_matrix.hpp"
#include "towercalc/exactalg/smith.hpp"

#include <optional>

namespace towercalc::exactalg {

/// Integer solutions of B x = y for a fixed B, via one Smith decomposition.
class LinearSystem {
 public:
  explicit LinearSystem(IntegerMatrix b);

  const IntegerMatrix& matrix() const noexcept { return b_; }

  /// Some x with B x = y, or nullopt if y is outside the column lattice of B.
  std::optional<IntegerVector> solve(const IntegerVector& y) const;
  bool contains(const IntegerVector& y) const { return solve(y).has_value(); }
  /// Column-by-column solution X of B X = Y; throws std::invalid_argument if
  /// some column of Y is outside the column lattice of B.
  IntegerMatrix solve_columns(const IntegerMatrix& y) const;

  /// Basis of {x : B x = 0}, as columns.
  IntegerMatrix kernel_basis() const;
  std::size_t rank() const { return snf_.rank(); }

 private:
  IntegerMatrix b_;
  SnfDecomposition snf_;
};

/// Basis (full column rank, as columns) of the lattice spanned by the columns
/// of `generators`. Row count is preserved even when the lattice is zero.
IntegerMatrix column_basis(const IntegerMatrix& generators);

/// Generators of {x : A x in span(L)} where L lists lattice generators as columns.
IntegerMatrix preimage_lattice(const IntegerMatrix& a, const IntegerMatrix& lattice);

/// span(small) is contained in span(big) (column lattices).
bool lattice_contains(const IntegerMatrix& big, const IntegerMatrix& small);
bool lattice_equal(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace towercalc::exactalg
