#include "omni/sim/lidar.hpp"

#include <algorithm>
#include <limits>

#include "omni/errors.hpp"
#include "omni/rng.hpp"

namespace omni::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slab test against a yaw-rotated box; ray expressed in world coordinates.
double ray_box_distance(const SceneBox& box, const Eigen::Vector3d& origin,
                        const Eigen::Vector3d& dir) {
  Eigen::Rotation2Dd r(-box.yaw);
  Eigen::Vector2d o2 = r * (origin.head<2>() - box.center.head<2>());
  Eigen::Vector2d d2 = r * dir.head<2>();
  Eigen::Vector3d o(o2.x(), o2.y(), origin.z() - box.center.z());
  Eigen::Vector3d d(d2.x(), d2.y(), dir.z());
  Eigen::Vector3d half = box.extents / 2.0;

  double tmin = 0.0;
  double tmax = kInf;
  for (int a = 0; a < 3; ++a) {
    if (std::abs(d[a]) < 1e-15) {
      if (o[a] < -half[a] || o[a] > half[a]) return kInf;
      continue;
    }
    double t1 = (-half[a] - o[a]) / d[a];
    double t2 = (half[a] - o[a]) / d[a];
    if (t1 > t2) std::swap(t1, t2);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
    if (tmin > tmax) return kInf;
  }
  return tmin > 0.0 ? tmin : (tmax > 0.0 ? 0.0 : kInf);
}

double ray_ground_distance(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir) {
  if (dir.z() >= -1e-15) return kInf;
  double t = -origin.z() / dir.z();
  return t > 0.0 ? t : kInf;
}

}  // namespace

double ray_scene_distance(const Scene& scene, const Eigen::Vector3d& origin,
                          const Eigen::Vector3d& dir) {
  double best = kInf;
  if (scene.has_ground) best = ray_ground_distance(origin, dir);
  for (const auto& box : scene.objects) best = std::min(best, ray_box_distance(box, origin, dir));
  return best;
}

Scan raycast_scan(const Scene& scene, const Eigen::Isometry3d& sensor_pose,
                  const LidarModel& model, std::uint64_t seed, double timestamp) {
  if (model.ring_count < 1 || model.azimuth_step <= 0.0 || model.max_range <= 0.0)
    throw InvalidInput("invalid lidar model");
  scene.validate();

  Rng rng(seed);
  Scan scan;
  scan.timestamp = timestamp;
  scan.max_range = model.max_range;
  // Bake the mount pitch into the beam frame (positive pitch = down).
  scan.sensor_pose = sensor_pose * Eigen::Isometry3d(Eigen::AngleAxisd(
                                       model.mount_pitch, Eigen::Vector3d::UnitY()));

  const int n = model.samples_per_ring();
  const Eigen::Vector3d origin = scan.sensor_pose.translation();
  const Eigen::Matrix3d rot = scan.sensor_pose.rotation();

  scan.rings.resize(model.ring_count);
  for (int r = 0; r < model.ring_count; ++r) {
    ScanRing& ring = scan.rings[r];
    ring.elevation = model.ring_elevation(r);
    ring.ranges.resize(n);
    ring.azimuths.resize(n);
    const double ce = std::cos(ring.elevation);
    const double se = std::sin(ring.elevation);
    for (int i = 0; i < n; ++i) {
      double az = i * model.azimuth_step;
      ring.azimuths[i] = az;
      Eigen::Vector3d dir_local(ce * std::cos(az), ce * std::sin(az), se);
      double dist = ray_scene_distance(scene, origin, rot * dir_local);
      if (dist >= model.max_range) {
        ring.ranges[i] = model.max_range;
        continue;
      }
      if (model.range_noise_sigma > 0.0) dist += rng.normal(model.range_noise_sigma);
      ring.ranges[i] = std::clamp(dist, 1e-9, model.max_range);
    }
  }
  return scan;
}

Eigen::Vector3d ring_point_world(const Scan& scan, int ring, int idx) {
  const ScanRing& r = scan.rings[ring];
  double az = r.azimuths[idx];
  double ce = std::cos(r.elevation);
  Eigen::Vector3d dir_local(ce * std::cos(az), ce * std::sin(az), std::sin(r.elevation));
  return scan.sensor_pose * (r.ranges[idx] * dir_local);
}

}  // namespace omni::sim
