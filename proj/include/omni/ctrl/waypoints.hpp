#pragma once

#include <vector>

#include "omni/ctrl/base_sim.hpp"
#include "omni/ctrl/controller.hpp"
#include "omni/pose2.hpp"

namespace omni::ctrl {

// Holonomic waypoint following: heads for the current waypoint at up to v_max
// with a braking profile, advances on entering the capture radius. Throws
// SearchExhausted once the list runs out.
class WaypointFollower {
 public:
  explicit WaypointFollower(std::vector<Pose2> waypoints) : waypoints_(std::move(waypoints)) {}

  VelocityCommand command(const BaseState& state, const ControllerParams& params);

  bool done() const { return index_ >= waypoints_.size(); }
  std::size_t index() const { return index_; }

 private:
  std::vector<Pose2> waypoints_;
  std::size_t index_ = 0;
};

// Free-function form of the waypoint command (spec surface); mutates `index`.
VelocityCommand follow_waypoints(const BaseState& state, const std::vector<Pose2>& waypoints,
                                 const ControllerParams& params, std::size_t& index);

}  // namespace omni::ctrl
