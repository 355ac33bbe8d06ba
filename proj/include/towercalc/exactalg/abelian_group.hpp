#pragma once

#include "towercalc/exactalg/integer_matrix.hpp"
#include "towercalc/exactalg/lattice.hpp"
#include "towercalc/exactalg/smith.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace towercalc::exactalg {

/// Z^generators modulo the row span of `relations` (one relation per row).
struct Presentation {
  std::size_t generators = 0;
  IntegerMatrix relations = IntegerMatrix(0, 0);

  static Presentation free(std::size_t n) { return {n, IntegerMatrix(0, n)}; }
  Presentation() = default;
  Presentation(std::size_t g, IntegerMatrix r);

  /// Relations as columns of a generators x count matrix.
  IntegerMatrix relation_lattice() const { return relations.transpose(); }
  /// True when every relation is zero.
  bool is_free() const { return relations.is_zero(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Finitely generated abelian group in invariant-factor normal form:
/// Z/t_1 + ... + Z/t_s + Z^rank with t_i >= 2 and t_i | t_{i+1}.
/// Equality of groups is equality of these fields.
class FpAbelianGroup {
 public:
  FpAbelianGroup() = default;

  /// Validates the normal form; throws std::invalid_argument otherwise.
  FpAbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  static FpAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  /// Z/order; order 0 gives Z and order 1 the zero group.
  static FpAbelianGroup cyclic(const Integer& order);
  /// Direct sum of cyclic groups Z/orders[i] (0 meaning Z), renormalized.
  static FpAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_free() const noexcept { return torsion_.empty(); }
  /// Order of a finite group; 1 for the zero group. Requires is_finite().
  Integer order() const;
  /// Order of the torsion subgroup.
  Integer torsion_order() const;

  /// Number of normal-form generators: torsion first, then free.
  std::size_t generator_count() const noexcept { return torsion_.size() + rank_; }
  /// Presentation on the normal-form generators.
  Presentation presentation() const;

  /// The cyclic orders of the normal form, 0 meaning Z.
  std::vector<Integer> cyclic_orders() const;

  std::string to_string() const;

  friend bool operator==(const FpAbelianGroup&, const FpAbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

std::ostream& operator<<(std::ostream& os, const FpAbelianGroup& g);

FpAbelianGroup direct_sum(const FpAbelianGroup& a, const FpAbelianGroup& b);

/// Normal form of Z^generators / rowspan(relations).
FpAbelianGroup group_from_presentation(std::size_t generators, const IntegerMatrix& relations);
FpAbelianGroup group_from_presentation(const Presentation& p);

/// Closed forms, extended additively.
FpAbelianGroup hom_group(const FpAbelianGroup& a, const FpAbelianGroup& b);
FpAbelianGroup ext_group(const FpAbelianGroup& a, const FpAbelianGroup& b);
FpAbelianGroup tensor_group(const FpAbelianGroup& a, const FpAbelianGroup& b);

/// A subquotient N / D of Z^n, where D (given by generators) lies inside the
/// lattice N. Carries an explicit isomorphism with its normal form, so elements
/// can be moved between ambient coordinates and normal-form coordinates.
class Subquotient {
 public:
  Subquotient() : Subquotient(IntegerMatrix(0, 0), IntegerMatrix(0, 0)) {}
  /// Columns of `numerator` span N, columns of `denominator` span D.
  /// Throws std::invalid_argument if D is not inside N.
  Subquotient(const IntegerMatrix& numerator, const IntegerMatrix& denominator);

  const FpAbelianGroup& group() const noexcept { return group_; }
  std::size_t ambient_dimension() const noexcept { return basis_.rows(); }
  const IntegerMatrix& numerator_basis() const noexcept { return basis_; }

  bool contains(const IntegerVector& ambient) const;
  /// Normal-form coordinates of an ambient vector of N (torsion entries
  /// reduced into [0, t)). Throws std::invalid_argument if outside N.
  IntegerVector coordinates(const IntegerVector& ambient) const;
  /// Coordinates of an element of N on the numerator basis.
  IntegerVector basis_coordinates(const IntegerVector& ambient) const;
  /// Ambient representative of normal-form generator i.
  IntegerVector generator(std::size_t i) const;
  /// Ambient representatives of all normal-form generators, as columns.
  IntegerMatrix generator_matrix() const;

  /// The module written on the numerator basis: generators = basis size,
  /// relations = basis coordinates of the denominator generators.
  Presentation presentation_on_basis() const;

 private:
  IntegerMatrix basis_;
  LinearSystem basis_solver_;
  IntegerMatrix relation_coordinates_;
  SnfDecomposition snf_;
  std::vector<std::size_t> kept_;  // SNF indices of nontrivial normal-form components
  FpAbelianGroup group_;
};

}  // namespace towercalc::exactalg
