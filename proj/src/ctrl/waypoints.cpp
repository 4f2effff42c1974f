#include "omni/ctrl/waypoints.hpp"

#include <cmath>

#include "omni/errors.hpp"

namespace omni::ctrl {

VelocityCommand follow_waypoints(const BaseState& state, const std::vector<Pose2>& waypoints,
                                 const ControllerParams& params, std::size_t& index) {
  if (waypoints.empty()) throw SearchExhausted("no waypoints");

  Eigen::Vector2d pos(state.x, state.y);
  while (index < waypoints.size() &&
         (waypoints[index].xy - pos).norm() <= params.capture_radius)
    ++index;
  if (index >= waypoints.size()) throw SearchExhausted("waypoint list exhausted");

  Eigen::Vector2d to_wp = waypoints[index].xy - pos;
  double dist = to_wp.norm();
  // brake so the robot can stop inside the capture radius
  double speed = std::min(params.v_max,
                          std::sqrt(2.0 * params.a_max * std::max(0.0, dist - 0.2)));
  Eigen::Vector2d v_world = dist > 1e-9 ? Eigen::Vector2d(to_wp / dist * speed)
                                        : Eigen::Vector2d::Zero();
  Eigen::Vector2d v_body = Eigen::Rotation2Dd(-state.yaw) * v_world;

  VelocityCommand cmd;
  cmd.vx = v_body.x();
  cmd.vy = v_body.y();
  cmd.vyaw = 0.0;  // holonomic, no heading constraint
  return cmd;
}

VelocityCommand WaypointFollower::command(const BaseState& state, const ControllerParams& params) {
  return follow_waypoints(state, waypoints_, params, index_);
}

}  // namespace omni::ctrl
