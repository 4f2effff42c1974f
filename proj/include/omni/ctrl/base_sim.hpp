#pragma once

#include <Eigen/Core>

#include "omni/ctrl/controller.hpp"
#include "omni/pose2.hpp"

namespace omni::ctrl {

// Kinematic state of the omnidirectional base. Velocities are body-frame.
struct BaseState {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  double vyaw = 0.0;
  double t = 0.0;

  double speed() const { return std::hypot(vx, vy); }
  Pose2 pose() const { return {{x, y}, yaw}; }
};

// Advances the base by dt: body velocity moves toward the command with
// acceleration magnitude <= a_max, speed capped at v_max, pose integrated
// with the updated velocity rotated to the world frame.
BaseState step_base(const BaseState& state, const VelocityCommand& cmd,
                    const ControllerParams& params, double dt);

}  // namespace omni::ctrl
