#include "towercalc/sections/sections.hpp"

#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <stdexcept>
#include <utility>

namespace towercalc::sections {

std::string LevelStructure::name() const {
  switch (kind) {
    case Kind::Plain:
      return "plain";
    case Kind::Truncated:
      return "P_" + std::to_string(n);
    case Kind::Local:
      return "local " + ring.name();
    case Kind::Terminal:
      return "terminal";
  }
  return "?";
}

Certificate is_weak_equivalence(const ChainMap& f, const LevelStructure& s) {
  using Kind = LevelStructure::Kind;
  switch (s.kind) {
    case Kind::Plain:
      return complex::is_quasi_iso(f);
    case Kind::Truncated:
      return trunc::is_Pn_weq(f, s.n);
    case Kind::Terminal:
      return Certificate::pass("terminal equivalence");
    case Kind::Local: {
      const std::string check = s.ring.name() + "-local equivalence";
      const auto [lo, hi] = complex::degree_span(f);
      for (long k = lo; k <= hi; ++k)
        if (!fracture::is_local_isomorphism(complex::induced_map(f, k), s.ring)) {
          auto fail = Certificate::fail(check, "H_" + std::to_string(k) + " is not an isomorphism after localizing");
          fail.at_degree(k);
          return fail;
        }
      return Certificate::pass(check);
    }
  }
  throw std::logic_error("is_weak_equivalence: unknown structure");
}

TowerSection::TowerSection(std::vector<ChainComplex> levels, std::vector<ChainMap> maps,
                           std::vector<LevelStructure> tags, std::optional<long> stabilization)
    : levels_(std::move(levels)),
      maps_(std::move(maps)),
      tags_(std::move(tags)),
      stabilization_(stabilization) {
  if (levels_.empty()) throw std::invalid_argument("TowerSection: no levels");
  if (maps_.size() + 1 != levels_.size())
    throw std::invalid_argument("TowerSection: expected " + std::to_string(levels_.size() - 1) +
                                " structure maps");
  if (tags_.empty())
    for (std::size_t i = 0; i < levels_.size(); ++i)
      tags_.push_back(LevelStructure::truncated(static_cast<long>(i)));
  if (tags_.size() != levels_.size())
    throw std::invalid_argument("TowerSection: one tag per level expected");
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (!(maps_[i].source() == levels_[i + 1]) || !(maps_[i].target() == levels_[i]))
      throw IllFormedMap("TowerSection: structure map " + std::to_string(i) +
                         " does not go X_" + std::to_string(i + 1) + " -> X_" + std::to_string(i));
  if (stabilization_ && (*stabilization_ < 0 || *stabilization_ > top()))
    throw std::invalid_argument("TowerSection: stabilization level outside the prefix");
}

ChainMap TowerSection::composite(long j, long i) const {
  if (j < i) throw std::invalid_argument("TowerSection::composite: j < i");
  ChainMap out = ChainMap::identity(level(j));
  for (long l = j - 1; l >= i; --l) out = out.then(map(l));
  return out;
}

CospanSection::CospanSection(ChainComplex x1_, ChainComplex x0_, ChainComplex x2_, ChainMap left_,
                             ChainMap right_, std::array<LevelStructure, 3> tags_)
    : x1(std::move(x1_)),
      x0(std::move(x0_)),
      x2(std::move(x2_)),
      left(std::move(left_)),
      right(std::move(right_)),
      tags(std::move(tags_)) {
  if (!(left.source() == x1) || !(left.target() == x0))
    throw IllFormedMap("CospanSection: left leg does not go X_1 -> X_0");
  if (!(right.source() == x2) || !(right.target() == x0))
    throw IllFormedMap("CospanSection: right leg does not go X_2 -> X_0");
}

SectionMorphism::SectionMorphism(TowerSection source, TowerSection target,
                                 std::vector<ChainMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.size() != target_.size() || components_.size() != source_.size())
    throw IllFormedMap("SectionMorphism: length mismatch");
  for (long i = 0; i <= source_.top(); ++i) {
    const ChainMap& c = component(i);
    if (!(c.source() == source_.level(i)) || !(c.target() == target_.level(i)))
      throw IllFormedMap("SectionMorphism: component " + std::to_string(i) + " has wrong ends");
    if (i < source_.top() &&
        !complex::equal_maps(component(i + 1).then(target_.map(i)), source_.map(i).then(c)))
      throw IllFormedMap("SectionMorphism: square at level " + std::to_string(i) +
                         " does not commute");
  }
}

SectionMorphism SectionMorphism::identity(const TowerSection& t) {
  std::vector<ChainMap> comps;
  for (const auto& x : t.levels()) comps.push_back(ChainMap::identity(x));
  return {t, t, std::move(comps)};
}

SectionMorphism SectionMorphism::to_zero(const TowerSection& t) {
  const ChainComplex zero;
  std::vector<ChainComplex> levels(t.size(), zero);
  std::vector<ChainMap> maps(t.size() - 1, ChainMap::identity(zero));
  TowerSection target(std::move(levels), std::move(maps), t.tags(), t.stabilization());
  std::vector<ChainMap> comps;
  for (const auto& x : t.levels()) comps.push_back(ChainMap::zero(x, zero));
  return {t, std::move(target), std::move(comps)};
}

SectionMorphism SectionMorphism::then(const SectionMorphism& after) const {
  std::vector<ChainMap> comps;
  for (long i = 0; i <= source_.top(); ++i) comps.push_back(component(i).then(after.component(i)));
  return {source_, after.target_, std::move(comps)};
}

}  // namespace towercalc::sections
