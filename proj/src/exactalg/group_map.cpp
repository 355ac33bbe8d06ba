#include "towercalc/exactalg/group_map.hpp"

#include "towercalc/errors.hpp"

#include <utility>

namespace towercalc::exactalg {

GroupMap::GroupMap(Presentation source, Presentation target, IntegerMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators || matrix_.cols() != source_.generators) {
    if (matrix_.empty() && (target_.generators == 0 || source_.generators == 0)) {
      matrix_ = IntegerMatrix(target_.generators, source_.generators);
    } else {
      throw IllFormedMap("GroupMap: matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", expected " +
                         std::to_string(target_.generators) + "x" +
                         std::to_string(source_.generators));
    }
  }
  const IntegerMatrix images = matrix_ * source_.relation_lattice();
  if (!lattice_contains(target_.relation_lattice(), images))
    throw IllFormedMap("GroupMap: source relations are not carried into target relations");
}

GroupMap GroupMap::between(const FpAbelianGroup& source, const FpAbelianGroup& target,
                           IntegerMatrix matrix) {
  return {source.presentation(), target.presentation(), std::move(matrix)};
}

GroupMap GroupMap::identity(const Presentation& p) {
  return {p, p, IntegerMatrix::identity(p.generators)};
}

GroupMap GroupMap::zero(const Presentation& source, const Presentation& target) {
  return {source, target, IntegerMatrix(target.generators, source.generators)};
}

GroupMap GroupMap::then(const GroupMap& after) const {
  if (!(after.source_ == target_)) throw IllFormedMap("GroupMap::then: presentations differ");
  return {source_, after.target_, after.matrix_ * matrix_};
}

bool GroupMap::is_zero() const {
  return lattice_contains(target_.relation_lattice(), matrix_);
}

KernelImageCokernel kernel_image_cokernel(const GroupMap& f) {
  const IntegerMatrix source_rel = f.source().relation_lattice();
  const IntegerMatrix target_rel = f.target().relation_lattice();
  const IntegerMatrix image_lift = hstack(f.matrix(), target_rel);
  Subquotient kernel(preimage_lattice(f.matrix(), target_rel), source_rel);
  Subquotient image(image_lift, target_rel);
  Subquotient cokernel(IntegerMatrix::identity(f.target().generators), image_lift);
  return {kernel.group(),     image.group(),     cokernel.group(),
          std::move(kernel), std::move(image), std::move(cokernel)};
}

bool is_injective(const GroupMap& f) {
  const IntegerMatrix lifted_kernel = preimage_lattice(f.matrix(), f.target().relation_lattice());
  return lattice_contains(f.source().relation_lattice(), lifted_kernel);
}

bool is_surjective(const GroupMap& f) {
  const IntegerMatrix image_lift = hstack(f.matrix(), f.target().relation_lattice());
  return lattice_contains(image_lift, IntegerMatrix::identity(f.target().generators));
}

bool is_isomorphism(const GroupMap& f) { return is_surjective(f) && is_injective(f); }

bool is_exact_at_middle(const GroupMap& f, const GroupMap& g) {
  if (!(f.target() == g.source())) throw IllFormedMap("is_exact_at_middle: maps not composable");
  const IntegerMatrix middle_rel = f.target().relation_lattice();
  const IntegerMatrix image_lift = hstack(f.matrix(), middle_rel);
  const IntegerMatrix kernel_lift = preimage_lattice(g.matrix(), g.target().relation_lattice());
  return lattice_equal(image_lift, kernel_lift);
}

bool image_contained(const GroupMap& f, const GroupMap& g) {
  const IntegerMatrix rel = f.target().relation_lattice();
  return lattice_contains(hstack(g.matrix(), rel), f.matrix());
}

bool same_image(const GroupMap& f, const GroupMap& g) {
  return image_contained(f, g) && image_contained(g, f);
}

GroupPullback pullback_group(const GroupMap& f, const GroupMap& g) {
  if (!(f.target() == g.target())) throw IllFormedMap("pullback_group: targets differ");
  const std::size_t a = f.source().generators;
  const std::size_t b = g.source().generators;
  const IntegerMatrix difference = hstack(f.matrix(), -g.matrix());
  const Subquotient sq(preimage_lattice(difference, f.target().relation_lattice()),
                       block_diagonal(f.source().relation_lattice(), g.source().relation_lattice()));
  const IntegerMatrix gens = sq.generator_matrix();
  const Presentation p = sq.group().presentation();
  return {sq.group(), GroupMap(p, f.source(), gens.row_range(0, a)),
          GroupMap(p, g.source(), gens.row_range(a, a + b))};
}

}  // namespace towercalc::exactalg
