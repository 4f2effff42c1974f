#include "omni/ctrl/localize.hpp"

#include "omni/errors.hpp"

namespace omni::ctrl {

void Localizer::on_gps(const Pose2& gps_fix, const Eigen::Vector2d& base_station_fix,
                       const Pose2& odom, double stamp) {
  Pose2 corrected;
  corrected.xy = gps_fix.xy - (base_station_fix - base_known_);
  corrected.yaw = gps_fix.yaw;  // compass channel
  offset_ = corrected.compose(odom.inverse());
  has_fix_ = true;
  last_fix_time_ = stamp;
}

Pose2 localize(const Pose2& odom, const Pose2& gps_fix, const Eigen::Vector2d& base_station_fix,
               double fix_stamp, double now, Localizer& state) {
  if (now - fix_stamp <= state.fix_timeout()) {
    state.on_gps(gps_fix, base_station_fix, odom, fix_stamp);
    return state.pose(odom);
  }
  Pose2 pose = state.pose(odom);
  (void)pose;
  throw GpsStale("gps fix older than timeout; continue on odometry");
}

}  // namespace omni::ctrl
