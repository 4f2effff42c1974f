#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "omni/angles.hpp"
#include "omni/sim/lidar.hpp"
#include "omni/sim/scene.hpp"

namespace omni::detect {

// Width-specific detection in scan rings. Two circular median filters run per
// sample: the smaller (noise) kernel preserves objects near the target width
// while removing narrower structure, the larger (background) kernel removes
// the target as well, so their response difference marks width-matched runs.
struct DetectorParams {
  double object_width = 0.55;          // w, meters
  double response_threshold = 0.61;    // kappa, meters
  double background_factor = 1.5;
  double cluster_tolerance = 0.6;      // meters
  int min_cluster_points = 4;
  Eigen::Vector3d panel_max_dims = Eigen::Vector3d(1.6, 1.6, 1.6);
  sim::Rect2 arena_bounds;
  double min_mean_height = 0.05;       // meters above ground
};

struct KernelSizes {
  int noise_k = 3;       // odd
  int background_k = 5;  // odd, > noise_k
};

// Distance-adaptive kernel sizes for an object of width w seen at `distance`:
//   beta = arctan(0.5 w / distance), n = round(2 beta / azimuth_step),
//   noise_k = next odd >= 2n (min 3), background_k = next odd >= factor*noise_k.
KernelSizes kernel_sizes(double object_width, double distance, double azimuth_step,
                         double background_factor = 1.5);

// Indices whose background-vs-noise median response difference exceeds kappa.
// Kernels are evaluated per sample from that sample's own measured range;
// windows wrap around the ring seam. Sentinel samples are never selected.
std::vector<int> detect_ring(const sim::ScanRing& ring, double max_range,
                             const DetectorParams& params, double azimuth_step);

// Runs detect_ring on every ring and lifts detections to world-frame points.
std::vector<Eigen::Vector3d> detect_scan(const sim::Scan& scan, const DetectorParams& params);

}  // namespace omni::detect
