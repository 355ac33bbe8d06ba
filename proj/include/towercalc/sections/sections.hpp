#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/complex/chain_complex.hpp"
#include "towercalc/fracture/localization.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace towercalc::sections {

using complex::ChainComplex;
using complex::ChainMap;

/// Which localized model structure a level carries; it decides the weak
/// equivalences there.
struct LevelStructure {
  enum class Kind { Plain, Truncated, Local, Terminal };
  Kind kind = Kind::Plain;
  long n = 0;                  // Truncated
  fracture::LocalRing ring;    // Local; no primes means Q

  static LevelStructure plain() { return {}; }
  static LevelStructure truncated(long n) { return {Kind::Truncated, n, {}}; }
  static LevelStructure local(fracture::PrimeSet primes) {
    return {Kind::Local, 0, {std::move(primes)}};
  }
  static LevelStructure rational() { return {Kind::Local, 0, {}}; }
  static LevelStructure terminal() { return {Kind::Terminal, 0, {}}; }

  std::string name() const;
  friend bool operator==(const LevelStructure&, const LevelStructure&) = default;
};

/// f is a weak equivalence in the given structure: a quasi-isomorphism, an
/// isomorphism on H_{<=n}, an isomorphism on homology after localizing, or
/// anything at all.
Certificate is_weak_equivalence(const ChainMap& f, const LevelStructure& s);

/// A finite prefix X_0 <- X_1 <- ... <- X_m with maps[i] : X_{i+1} -> X_i.
/// `stabilization`, when declared, is the level from which every structure map
/// is claimed to be an isomorphism of complexes.
class TowerSection {
 public:
  TowerSection() = default;
  /// Throws IllFormedMap if a map does not go X_{i+1} -> X_i, and
  /// std::invalid_argument if the counts disagree. Missing tags default to
  /// Truncated(i) at level i.
  TowerSection(std::vector<ChainComplex> levels, std::vector<ChainMap> maps,
               std::vector<LevelStructure> tags = {}, std::optional<long> stabilization = {});

  std::size_t size() const noexcept { return levels_.size(); }
  long top() const noexcept { return static_cast<long>(levels_.size()) - 1; }
  const ChainComplex& level(long i) const { return levels_.at(static_cast<std::size_t>(i)); }
  /// X_{i+1} -> X_i.
  const ChainMap& map(long i) const { return maps_.at(static_cast<std::size_t>(i)); }
  const LevelStructure& tag(long i) const { return tags_.at(static_cast<std::size_t>(i)); }
  const std::vector<ChainComplex>& levels() const noexcept { return levels_; }
  const std::vector<ChainMap>& maps() const noexcept { return maps_; }
  const std::vector<LevelStructure>& tags() const noexcept { return tags_; }
  std::optional<long> stabilization() const noexcept { return stabilization_; }

  /// Composite X_j -> X_i for j >= i.
  ChainMap composite(long j, long i) const;

 private:
  std::vector<ChainComplex> levels_;
  std::vector<ChainMap> maps_;
  std::vector<LevelStructure> tags_;
  std::optional<long> stabilization_;
};

/// X_1 -> X_0 <- X_2, tags for (X_1, X_0, X_2).
struct CospanSection {
  ChainComplex x1, x0, x2;
  ChainMap left, right;
  std::array<LevelStructure, 3> tags;

  /// Throws IllFormedMap if the legs do not land in X_0.
  CospanSection(ChainComplex x1, ChainComplex x0, ChainComplex x2, ChainMap left, ChainMap right,
                std::array<LevelStructure, 3> tags = {});
};

/// Componentwise maps phi_i : X_i -> Y_i commuting with the structure maps.
class SectionMorphism {
 public:
  /// Throws IllFormedMap if a component has the wrong ends or a square fails
  /// to commute.
  SectionMorphism(TowerSection source, TowerSection target, std::vector<ChainMap> components);

  static SectionMorphism identity(const TowerSection& t);
  /// X_. -> 0.
  static SectionMorphism to_zero(const TowerSection& t);

  const TowerSection& source() const noexcept { return source_; }
  const TowerSection& target() const noexcept { return target_; }
  const ChainMap& component(long i) const { return components_.at(static_cast<std::size_t>(i)); }

  SectionMorphism then(const SectionMorphism& after) const;

 private:
  TowerSection source_;
  TowerSection target_;
  std::vector<ChainMap> components_;
};

}  // namespace towercalc::sections
