#pragma once

#include "towercalc/exactalg/group_map.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace towercalc::complex {

using exactalg::FpAbelianGroup;
using exactalg::GroupMap;
using exactalg::Integer;
using exactalg::IntegerMatrix;
using exactalg::IntegerVector;
using exactalg::Presentation;

/// Bounded chain complex of finitely presented abelian groups, homological
/// indexing. Degree min_degree() + j is presented by degrees()[j];
/// differentials()[j] maps degree min_degree() + j + 1 to min_degree() + j.
/// Everything outside [min_degree(), max_degree()] is zero.
class ChainComplex {
 public:
  /// The zero complex.
  ChainComplex() = default;

  /// Throws ValidationError (location "degree k") if a differential has the
  /// wrong shape, does not respect relations, or d o d is nonzero.
  ChainComplex(long min_degree, std::vector<Presentation> degrees,
               std::vector<IntegerMatrix> differentials);

  long min_degree() const noexcept { return min_degree_; }
  /// min_degree() - 1 for the zero complex.
  long max_degree() const noexcept { return min_degree_ + static_cast<long>(degrees_.size()) - 1; }
  std::size_t length() const noexcept { return degrees_.size(); }
  bool in_range(long k) const noexcept { return k >= min_degree_ && k <= max_degree(); }

  /// Presentation of degree k (the zero group outside the range).
  Presentation at(long k) const;
  std::size_t generators(long k) const;
  /// Relations of degree k as lattice columns (generators(k) x count).
  IntegerMatrix relation_lattice(long k) const;
  /// d_k : degree k -> degree k-1, shaped generators(k-1) x generators(k).
  IntegerMatrix differential(long k) const;

  const std::vector<Presentation>& degrees() const noexcept { return degrees_; }
  const std::vector<IntegerMatrix>& differentials() const noexcept { return differentials_; }

  /// True when no degree carries a nonzero relation.
  bool is_free() const;
  /// Lowest degree with a nonzero relation, if any.
  std::optional<long> first_relation_degree() const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  long min_degree_ = 0;
  std::vector<Presentation> degrees_;
  std::vector<IntegerMatrix> differentials_;
};

/// Morphism of chain complexes, given degreewise on generators.
class ChainMap {
 public:
  /// components[j] acts in degree source.min_degree() + j and is shaped
  /// target.generators(k) x source.generators(k). Throws IllFormedMap if a
  /// component does not respect relations or the map does not commute with d.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<IntegerMatrix> components);

  static ChainMap identity(const ChainComplex& x);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  /// Zero-shaped outside the source range.
  IntegerMatrix component(long k) const;
  const std::vector<IntegerMatrix>& components() const noexcept { return components_; }
  /// The degree-k component as a map of presented groups.
  GroupMap component_map(long k) const;

  /// after o this.
  ChainMap then(const ChainMap& after) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<IntegerMatrix> components_;
};

/// Same source and target, and the componentwise difference lands in the
/// target relations.
bool equal_maps(const ChainMap& f, const ChainMap& g);

/// Degreewise isomorphism of complexes (then the inverse is a chain map too).
bool is_isomorphism(const ChainMap& f);

// Elementary complexes.
ChainComplex zero_complex();
/// Z concentrated in degree n.
ChainComplex sphere(long n);
/// Z in degrees n and n-1 with identity differential.
ChainComplex disk(long n);
/// Z --t--> Z in degrees n+1, n, so H_n = Z/t.
ChainComplex moore(const Integer& t, long n = 0);
/// The group A concentrated in degree n, on its normal-form presentation.
ChainComplex concentrated(const FpAbelianGroup& a, long n);

}  // namespace towercalc::complex
