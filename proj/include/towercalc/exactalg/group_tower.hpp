#pragma once

#include "towercalc/exactalg/group_map.hpp"

#include <cstddef>
#include <vector>

namespace towercalc::exactalg {

/// Finite prefix A_0 <- A_1 <- ... <- A_m of a tower of groups, with a
/// verified index s such that A_{i+1} -> A_i is an isomorphism for i >= s.
class GroupTower {
 public:
  /// maps[i] : A_{i+1} -> A_i, given on normal-form generators.
  /// Throws StabilizationViolated at the first i >= s that is not an isomorphism.
  GroupTower(std::vector<FpAbelianGroup> groups, std::vector<GroupMap> maps,
             std::size_t stabilization_index);

  const std::vector<FpAbelianGroup>& groups() const noexcept { return groups_; }
  const std::vector<GroupMap>& maps() const noexcept { return maps_; }
  std::size_t stabilization_index() const noexcept { return stabilization_index_; }

 private:
  std::vector<FpAbelianGroup> groups_;
  std::vector<GroupMap> maps_;
  std::size_t stabilization_index_;
};

/// lim^1 is only ever certified to vanish; towers that fail the certificate
/// are rejected at construction instead.
enum class Lim1Status { Zero };

struct TowerLimit {
  FpAbelianGroup limit;
  Lim1Status lim1 = Lim1Status::Zero;
};

TowerLimit tower_lim_lim1(const GroupTower& tower);

/// ImagesStabilizeBy(index) when `stabilized`, NotStabilizedWithin(horizon) otherwise.
struct MittagLefflerVerdict {
  bool stabilized = false;
  std::size_t index = 0;

  static MittagLefflerVerdict images_stabilize_by(std::size_t i) { return {true, i}; }
  static MittagLefflerVerdict not_stabilized_within(std::size_t h) { return {false, h}; }
  friend bool operator==(const MittagLefflerVerdict&, const MittagLefflerVerdict&) = default;
};

/// For each level i with i + horizon inside the prefix, walks the image chain
/// im(A_{i+k} -> A_i), k = 0..horizon, and reports the first k after which the
/// chain is constant (maximized over i). Requires at least `horizon` maps.
MittagLefflerVerdict mittag_leffler_diagnostic(const std::vector<FpAbelianGroup>& groups,
                                               const std::vector<GroupMap>& maps,
                                               std::size_t horizon);

}  // namespace towercalc::exactalg
