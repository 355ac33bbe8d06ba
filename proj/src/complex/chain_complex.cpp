#include "towercalc/complex/chain_complex.hpp"

#include "towercalc/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace towercalc::complex {

using exactalg::lattice_contains;

namespace {

std::string at_degree(long k) { return "degree " + std::to_string(k); }

// Empty matrices arrive with arbitrary shapes from documents and builders;
// give them the exact zero shape expected in this slot.
IntegerMatrix fit_shape(IntegerMatrix m, std::size_t rows, std::size_t cols) {
  if (m.rows() == rows && m.cols() == cols) return m;
  if (m.empty() && (rows == 0 || cols == 0)) return IntegerMatrix(rows, cols);
  throw IllFormedMap("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

ChainComplex::ChainComplex(long min_degree, std::vector<Presentation> degrees,
                           std::vector<IntegerMatrix> differentials)
    : min_degree_(min_degree), degrees_(std::move(degrees)), differentials_(std::move(differentials)) {
  const std::size_t expected = degrees_.empty() ? 0 : degrees_.size() - 1;
  if (differentials_.size() != expected)
    throw ValidationError("differentials", "expected " + std::to_string(expected) +
                                               " matrices, got " +
                                               std::to_string(differentials_.size()));
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    auto& p = degrees_[j];
    if (p.relations.rows() == 0) p.relations = IntegerMatrix(0, p.generators);
    if (p.relations.cols() != p.generators)
      throw ValidationError(at_degree(min_degree_ + static_cast<long>(j)),
                            "relation rows must have one entry per generator");
  }
  for (std::size_t j = 0; j < differentials_.size(); ++j) {
    const long k = min_degree_ + static_cast<long>(j) + 1;
    try {
      differentials_[j] =
          fit_shape(std::move(differentials_[j]), degrees_[j].generators, degrees_[j + 1].generators);
    } catch (const IllFormedMap& e) {
      throw ValidationError(at_degree(k), std::string("differential ") + e.what());
    }
    const IntegerMatrix images = differentials_[j] * degrees_[j + 1].relation_lattice();
    if (!lattice_contains(degrees_[j].relation_lattice(), images))
      throw ValidationError(at_degree(k), "differential does not respect relations");
  }
  for (std::size_t j = 1; j < differentials_.size(); ++j) {
    const IntegerMatrix dd = differentials_[j - 1] * differentials_[j];
    if (!lattice_contains(degrees_[j - 1].relation_lattice(), dd))
      throw ValidationError(at_degree(min_degree_ + static_cast<long>(j) + 1),
                            "d o d is nonzero");
  }
}

Presentation ChainComplex::at(long k) const {
  if (!in_range(k)) return Presentation::free(0);
  return degrees_[static_cast<std::size_t>(k - min_degree_)];
}

std::size_t ChainComplex::generators(long k) const {
  return in_range(k) ? degrees_[static_cast<std::size_t>(k - min_degree_)].generators : 0;
}

IntegerMatrix ChainComplex::relation_lattice(long k) const {
  if (!in_range(k)) return IntegerMatrix(0, 0);
  return degrees_[static_cast<std::size_t>(k - min_degree_)].relation_lattice();
}

IntegerMatrix ChainComplex::differential(long k) const {
  if (in_range(k) && in_range(k - 1))
    return differentials_[static_cast<std::size_t>(k - 1 - min_degree_)];
  return IntegerMatrix(generators(k - 1), generators(k));
}

bool ChainComplex::is_free() const { return !first_relation_degree().has_value(); }

std::optional<long> ChainComplex::first_relation_degree() const {
  for (std::size_t j = 0; j < degrees_.size(); ++j)
    if (!degrees_[j].is_free()) return min_degree_ + static_cast<long>(j);
  return std::nullopt;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<IntegerMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (components_.size() != source_.length())
    throw IllFormedMap("ChainMap: expected " + std::to_string(source_.length()) +
                       " components, got " + std::to_string(components_.size()));
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const long k = source_.min_degree() + static_cast<long>(j);
    try {
      components_[j] =
          fit_shape(std::move(components_[j]), target_.generators(k), source_.generators(k));
    } catch (const IllFormedMap& e) {
      throw IllFormedMap("ChainMap " + at_degree(k) + ": " + e.what());
    }
    const IntegerMatrix images = components_[j] * source_.relation_lattice(k);
    if (!lattice_contains(target_.relation_lattice(k), images))
      throw IllFormedMap("ChainMap " + at_degree(k) + ": relations are not respected");
  }
  // d F_k - F_{k-1} d must land in the target relations of degree k-1.
  for (long k = source_.min_degree(); k <= source_.max_degree() + 1; ++k) {
    const IntegerMatrix lhs = target_.differential(k) * component(k);
    const IntegerMatrix rhs = component(k - 1) * source_.differential(k);
    if (!lattice_contains(target_.relation_lattice(k - 1), lhs - rhs))
      throw IllFormedMap("ChainMap " + at_degree(k) + ": does not commute with differentials");
  }
}

ChainMap ChainMap::identity(const ChainComplex& x) {
  std::vector<IntegerMatrix> comps;
  for (const auto& p : x.degrees()) comps.push_back(IntegerMatrix::identity(p.generators));
  return {x, x, std::move(comps)};
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  std::vector<IntegerMatrix> comps;
  for (long k = source.min_degree(); k <= source.max_degree(); ++k)
    comps.emplace_back(target.generators(k), source.generators(k));
  return {source, target, std::move(comps)};
}

IntegerMatrix ChainMap::component(long k) const {
  if (!source_.in_range(k)) return IntegerMatrix(target_.generators(k), source_.generators(k));
  return components_[static_cast<std::size_t>(k - source_.min_degree())];
}

GroupMap ChainMap::component_map(long k) const {
  return {source_.at(k), target_.at(k), component(k)};
}

ChainMap ChainMap::then(const ChainMap& after) const {
  if (!(target_ == after.source_)) throw IllFormedMap("ChainMap::then: maps are not composable");
  std::vector<IntegerMatrix> comps;
  for (long k = source_.min_degree(); k <= source_.max_degree(); ++k)
    comps.push_back(after.component(k) * component(k));
  return {source_, after.target_, std::move(comps)};
}

bool equal_maps(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
  for (long k = f.source().min_degree(); k <= f.source().max_degree(); ++k)
    if (!lattice_contains(f.target().relation_lattice(k), f.component(k) - g.component(k)))
      return false;
  return true;
}

bool is_isomorphism(const ChainMap& f) {
  const long lo = std::min(f.source().min_degree(), f.target().min_degree());
  const long hi = std::max(f.source().max_degree(), f.target().max_degree());
  for (long k = lo; k <= hi; ++k)
    if (!exactalg::is_isomorphism(f.component_map(k))) return false;
  return true;
}

ChainComplex zero_complex() { return {}; }

ChainComplex sphere(long n) { return {n, {Presentation::free(1)}, {}}; }

ChainComplex disk(long n) {
  return {n - 1, {Presentation::free(1), Presentation::free(1)}, {IntegerMatrix{{1}}}};
}

ChainComplex moore(const Integer& t, long n) {
  IntegerMatrix d(1, 1);
  d(0, 0) = t;
  return {n, {Presentation::free(1), Presentation::free(1)}, {d}};
}

ChainComplex concentrated(const FpAbelianGroup& a, long n) {
  return {n, {a.presentation()}, {}};
}

}  // namespace towercalc::complex
