#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "omni/detect/detector.hpp"

namespace omni::detect {

// Spatially grouped detection points; candidate panel.
struct Cluster {
  std::vector<Eigen::Vector3d> points;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  Eigen::Vector3d bbox_dims = Eigen::Vector3d::Zero();  // axis-aligned extents
  double first_seen = 0.0;
  double last_seen = 0.0;
  int track_id = -1;
  int observations = 1;

  void recompute_stats();
};

// Connected components under pairwise distance <= cluster_tolerance;
// components with fewer than min_cluster_points are dropped.
std::vector<Cluster> cluster_detections(const std::vector<Eigen::Vector3d>& points,
                                        const DetectorParams& params);

// Keeps clusters with bbox within panel_max_dims, centroid inside the arena,
// and mean height above the ground plane.
std::vector<Cluster> filter_clusters(const std::vector<Cluster>& clusters,
                                     const DetectorParams& params);

// Nearest-neighbour frame-to-frame association. Matched tracks update their
// centroid as a running mean and refresh last_seen; unmatched new clusters
// open tracks; tracks stale beyond `timeout` are dropped.
std::vector<Cluster> track_clusters(std::vector<Cluster> tracks, const std::vector<Cluster>& fresh,
                                    double now, double gate, double timeout, int& next_track_id);

// Stateful convenience wrapper around track_clusters.
class ClusterTracker {
 public:
  ClusterTracker(double gate, double timeout) : gate_(gate), timeout_(timeout) {}

  void update(const std::vector<Cluster>& fresh, double now) {
    tracks_ = track_clusters(std::move(tracks_), fresh, now, gate_, timeout_, next_id_);
  }

  const std::vector<Cluster>& tracks() const { return tracks_; }

  // Track with at least min_observations, nearest to `from`, or nullptr.
  const Cluster* best_confirmed(const Eigen::Vector2d& from, int min_observations = 2) const;

 private:
  double gate_;
  double timeout_;
  int next_id_ = 0;
  std::vector<Cluster> tracks_;
};

}  // namespace omni::detect
