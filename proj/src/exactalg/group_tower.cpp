#include "towercalc/exactalg/group_tower.hpp"

#include "towercalc/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace towercalc::exactalg {

GroupTower::GroupTower(std::vector<FpAbelianGroup> groups, std::vector<GroupMap> maps,
                       std::size_t stabilization_index)
    : groups_(std::move(groups)), maps_(std::move(maps)), stabilization_index_(stabilization_index) {
  if (groups_.empty()) throw std::invalid_argument("GroupTower: no groups");
  if (maps_.size() + 1 != groups_.size())
    throw std::invalid_argument("GroupTower: need exactly one map per consecutive pair");
  if (stabilization_index_ >= groups_.size())
    throw std::invalid_argument("GroupTower: stabilization index beyond the prefix");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (!(maps_[i].source() == groups_[i + 1].presentation()) ||
        !(maps_[i].target() == groups_[i].presentation()))
      throw IllFormedMap("GroupTower: map " + std::to_string(i) +
                         " is not written on normal-form generators");
  }
  for (std::size_t i = stabilization_index_; i < maps_.size(); ++i) {
    if (!is_isomorphism(maps_[i]))
      throw StabilizationViolated(i, "GroupTower: A_" + std::to_string(i + 1) + " -> A_" +
                                         std::to_string(i) + " is not an isomorphism");
  }
}

TowerLimit tower_lim_lim1(const GroupTower& tower) {
  return {tower.groups()[tower.stabilization_index()], Lim1Status::Zero};
}

MittagLefflerVerdict mittag_leffler_diagnostic(const std::vector<FpAbelianGroup>& groups,
                                               const std::vector<GroupMap>& maps,
                                               std::size_t horizon) {
  if (maps.size() < horizon || groups.size() != maps.size() + 1)
    throw std::invalid_argument("mittag_leffler_diagnostic: prefix shorter than horizon");
  if (horizon == 0) return MittagLefflerVerdict::images_stabilize_by(0);
  std::size_t worst = 0;
  for (std::size_t i = 0; i + horizon <= maps.size(); ++i) {
    // images[k] = image of the composite A_{i+k} -> A_i, as a map.
    std::vector<GroupMap> composites;
    composites.push_back(GroupMap::identity(groups[i].presentation()));
    for (std::size_t k = 1; k <= horizon; ++k) composites.push_back(maps[i + k - 1].then(composites.back()));
    if (!same_image(composites[horizon - 1], composites[horizon]))
      return MittagLefflerVerdict::not_stabilized_within(horizon);
    std::size_t first = horizon - 1;
    while (first > 0 && same_image(composites[first - 1], composites[horizon])) --first;
    worst = std::max(worst, first);
  }
  return MittagLefflerVerdict::images_stabilize_by(worst);
}

}  // namespace towercalc::exactalg
