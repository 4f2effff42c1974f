#include "omni/ctrl/base_sim.hpp"

#include <algorithm>
#include <cmath>

#include "omni/errors.hpp"

namespace omni::ctrl {

namespace {
constexpr double kYawAccel = 10.0;  // rad/s^2, effectively snappy yaw response
}

BaseState step_base(const BaseState& state, const VelocityCommand& cmd,
                    const ControllerParams& params, double dt) {
  if (dt <= 0.0) throw InvalidInput("step_base: dt must be positive");

  Eigen::Vector2d v(state.vx, state.vy);
  Eigen::Vector2d v_cmd(cmd.vx, cmd.vy);
  if (v_cmd.norm() > params.v_max) v_cmd *= params.v_max / v_cmd.norm();

  Eigen::Vector2d dv = v_cmd - v;
  double max_dv = params.a_max * dt;
  if (dv.norm() > max_dv) dv *= max_dv / dv.norm();
  v += dv;
  if (v.norm() > params.v_max) v *= params.v_max / v.norm();

  double dvyaw = std::clamp(cmd.vyaw - state.vyaw, -kYawAccel * dt, kYawAccel * dt);

  BaseState out = state;
  out.vx = v.x();
  out.vy = v.y();
  out.vyaw = state.vyaw + dvyaw;
  Eigen::Vector2d world_v = Eigen::Rotation2Dd(state.yaw) * v;
  out.x += world_v.x() * dt;
  out.y += world_v.y() * dt;
  out.yaw = wrap_angle(state.yaw + out.vyaw * dt);
  out.t += dt;
  return out;
}

}  // namespace omni::ctrl
