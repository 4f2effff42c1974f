#pragma once

#include <Eigen/Core>
#include <optional>

#include "omni/pose2.hpp"

namespace omni::ctrl {

// Differential offset localization. Wheel odometry drifts; each fix from the
// filtered GPS/compass unit re-anchors a world-from-odom offset. A second
// receiver at a known location supplies the common-mode GPS bias, which is
// subtracted from the rover fix before anchoring, so a bias applied to both
// receivers cancels.
class Localizer {
 public:
  Localizer(const Eigen::Vector2d& base_station_known, double fix_timeout = 1.0)
      : base_known_(base_station_known), fix_timeout_(fix_timeout) {}

  // gps_fix: rover pose measured in the world frame (yaw from the compass).
  // base_station_fix: measured position of the static base station.
  void on_gps(const Pose2& gps_fix, const Eigen::Vector2d& base_station_fix, const Pose2& odom,
              double stamp);

  // Current world pose given the latest odometry; pure offset composition.
  Pose2 pose(const Pose2& odom) const { return offset_.compose(odom); }

  bool has_fix() const { return has_fix_; }
  bool stale(double now) const { return !has_fix_ || now - last_fix_time_ > fix_timeout_; }
  double fix_timeout() const { return fix_timeout_; }

 private:
  Eigen::Vector2d base_known_;
  double fix_timeout_;
  Pose2 offset_;  // world-from-odom
  bool has_fix_ = false;
  double last_fix_time_ = 0.0;
};

// One-shot form: corrects `odom` with the given fixes and returns the world
// pose. Throws GpsStale when the fix is older than the localizer timeout
// (callers keep running on odometry).
Pose2 localize(const Pose2& odom, const Pose2& gps_fix, const Eigen::Vector2d& base_station_fix,
               double fix_stamp, double now, Localizer& state);

}  // namespace omni::ctrl
