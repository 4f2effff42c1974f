#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <vector>

#include "omni/angles.hpp"
#include "omni/sim/scene.hpp"

namespace omni::sim {

// Spinning multi-ring LiDAR. Rings are spaced symmetrically about the optical
// axis; the whole unit is pitched down by `mount_pitch`.
struct LidarModel {
  int ring_count = 16;
  double ring_elevation_spacing = deg_to_rad(2.0);
  double azimuth_step = deg_to_rad(0.2);
  double mount_pitch = deg_to_rad(10.0);  // positive = pitched down
  double max_range = 100.0;
  double range_noise_sigma = 0.0;
  double revolution_rate = 10.0;  // Hz

  int samples_per_ring() const {
    return static_cast<int>(std::lround(2.0 * kPi / azimuth_step));
  }
  // Elevation of ring i relative to the (pitched) optical plane.
  double ring_elevation(int i) const {
    return (i - (ring_count - 1) * 0.5) * ring_elevation_spacing;
  }
};

// One laser/detector pair over a full revolution, azimuth-ordered.
// No-return samples carry the max_range sentinel so ring indexing stays dense.
struct ScanRing {
  std::vector<double> ranges;
  std::vector<double> azimuths;
  double elevation = 0.0;
};

struct Scan {
  std::vector<ScanRing> rings;
  // Effective beam-frame pose (mount pitch already composed in); ray
  // directions reconstruct from (azimuths, elevation) in this frame.
  Eigen::Isometry3d sensor_pose = Eigen::Isometry3d::Identity();
  double timestamp = 0.0;
  double max_range = 100.0;
};

// Casts one full revolution. Every sample is the first box/ground hit along
// its ray plus N(0, range_noise_sigma); misses return the max_range sentinel.
// Pure function of (scene, pose, model, seed).
Scan raycast_scan(const Scene& scene, const Eigen::Isometry3d& sensor_pose,
                  const LidarModel& model, std::uint64_t seed, double timestamp = 0.0);

// First intersection distance of a world-space ray with the scene, or +inf.
double ray_scene_distance(const Scene& scene, const Eigen::Vector3d& origin,
                          const Eigen::Vector3d& dir);

// World-space point of sample `idx` on ring `ring`.
Eigen::Vector3d ring_point_world(const Scan& scan, int ring, int idx);

inline bool is_no_return(const Scan& scan, int ring, int idx) {
  return scan.rings[ring].ranges[idx] >= scan.max_range;
}

}  // namespace omni::sim
