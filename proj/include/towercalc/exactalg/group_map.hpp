#pragma once

#include "towercalc/exactalg/abelian_group.hpp"

namespace towercalc::exactalg {

/// Homomorphism between presented groups, given on generators
/// (target.generators x source.generators). Well-definedness is checked.
class GroupMap {
 public:
  /// Throws IllFormedMap if the matrix does not carry source relations into
  /// the target relation lattice, or has the wrong shape.
  GroupMap(Presentation source, Presentation target, IntegerMatrix matrix);

  /// Map between normal-form groups, on their normal-form generators.
  static GroupMap between(const FpAbelianGroup& source, const FpAbelianGroup& target,
                          IntegerMatrix matrix);
  static GroupMap identity(const Presentation& p);
  static GroupMap zero(const Presentation& source, const Presentation& target);

  const Presentation& source() const noexcept { return source_; }
  const Presentation& target() const noexcept { return target_; }
  const IntegerMatrix& matrix() const noexcept { return matrix_; }

  /// after ∘ this.
  GroupMap then(const GroupMap& after) const;

  /// True if the map sends every generator into the target relations.
  bool is_zero() const;

 private:
  Presentation source_;
  Presentation target_;
  IntegerMatrix matrix_;
};

/// Kernel, image and cokernel in normal form, with the subquotient witnesses
/// (ambient coordinates: source generators for the kernel, target generators
/// for image and cokernel).
struct KernelImageCokernel {
  FpAbelianGroup kernel;
  FpAbelianGroup image;
  FpAbelianGroup cokernel;
  Subquotient kernel_witness;
  Subquotient image_witness;
  Subquotient cokernel_witness;
};

KernelImageCokernel kernel_image_cokernel(const GroupMap& f);

bool is_injective(const GroupMap& f);
bool is_surjective(const GroupMap& f);
bool is_isomorphism(const GroupMap& f);

/// im(f) = ker(g) inside the middle group, compared as lattices containing the
/// middle relations. Requires f.target() == g.source().
bool is_exact_at_middle(const GroupMap& f, const GroupMap& g);

/// Whether the image of f lies in the image of g (same target), and equality.
bool image_contained(const GroupMap& f, const GroupMap& g);
bool same_image(const GroupMap& f, const GroupMap& g);

struct GroupPullback {
  FpAbelianGroup group;
  GroupMap to_first;   // pullback -> A
  GroupMap to_second;  // pullback -> B
};

/// Kernel of (f, -g): A + B -> C, with both projections.
GroupPullback pullback_group(const GroupMap& f, const GroupMap& g);

}  // namespace towercalc::exactalg
