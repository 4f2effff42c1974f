#include "omni/ctrl/controller.hpp"

#include <algorithm>
#include <cmath>

namespace omni::ctrl {

int rsgn(double p_theta, ControllerState& state, double hysteresis) {
  const double half = hysteresis / 2.0;
  if (state.rsgn_sign == 0) state.rsgn_sign = p_theta >= 0.0 ? 1 : -1;
  if (p_theta > half)
    state.rsgn_sign = 1;
  else if (p_theta < -half)
    state.rsgn_sign = -1;
  return state.rsgn_sign;
}

VelocityCommand circle_command(const PanelEgo& panel, const ControllerParams& params,
                               ControllerState& state) {
  VelocityCommand cmd;
  cmd.vx = std::clamp(panel.position.x() - params.circle_radius, -params.v_limit, params.v_limit);
  cmd.vy = state.fade_alpha * rsgn(panel.yaw, state, params.hysteresis) * params.circle_radius *
           2.0 * kPi / params.period;
  cmd.vyaw = params.yaw_gain * std::atan2(panel.position.y(), panel.position.x());
  return cmd;
}

void advance_fade(ControllerState& state, const ControllerParams& params, double dt) {
  if (state.phase != Phase::Circle) return;
  state.fade_alpha = params.fade_time <= 0.0
                         ? 1.0
                         : std::min(1.0, state.fade_alpha + dt / params.fade_time);
}

VelocityCommand local_approach_command(const Eigen::Vector3d& target_ego, double v_clamp,
                                       double vyaw_clamp) {
  VelocityCommand cmd;
  cmd.vx = std::clamp(target_ego.x(), -v_clamp, v_clamp);
  cmd.vy = std::clamp(target_ego.y(), -v_clamp, v_clamp);
  cmd.vyaw = std::clamp(target_ego.z(), -vyaw_clamp, vyaw_clamp);
  return cmd;
}

Eigen::Vector3d standoff_target_ego(const PanelEgo& panel, double standoff) {
  // panel front normal direction in the ego frame
  double n = wrap_angle(panel.yaw - kPi);
  Eigen::Vector2d target = panel.position + standoff * Eigen::Vector2d(std::cos(n), std::sin(n));
  return {target.x(), target.y(), panel.yaw};
}

void step_phase(ControllerState& state, const std::optional<PanelEgo>& panel,
                const ControllerParams& params) {
  switch (state.phase) {
    case Phase::Navigate:
      if (panel && panel->position.norm() <= params.engage_distance) state.phase = Phase::Circle;
      break;
    case Phase::Circle:
      if (panel && std::abs(panel->yaw) < params.switch_yaw_tol) state.phase = Phase::LocalApproach;
      break;
    case Phase::LocalApproach:
      if (panel) {
        Eigen::Vector3d t = standoff_target_ego(*panel, params.standoff);
        if (t.head<2>().norm() < params.arrive_pos_tol && std::abs(t.z()) < params.arrive_yaw_tol)
          state.phase = Phase::Arrived;
      }
      break;
    case Phase::Arrived:
      break;
  }
}

}  // namespace omni::ctrl
