#include "omni/detect/clustering.hpp"

#include <algorithm>
#include <limits>

namespace omni::detect {

void Cluster::recompute_stats() {
  if (points.empty()) return;
  Eigen::Vector3d lo = points.front();
  Eigen::Vector3d hi = points.front();
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
    sum += p;
  }
  centroid = sum / static_cast<double>(points.size());
  bbox_dims = hi - lo;
}

std::vector<Cluster> cluster_detections(const std::vector<Eigen::Vector3d>& points,
                                        const DetectorParams& params) {
  const int n = static_cast<int>(points.size());
  const double tol2 = params.cluster_tolerance * params.cluster_tolerance;
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  std::vector<Cluster> clusters;

  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    int id = static_cast<int>(clusters.size());
    Cluster c;
    stack.assign(1, i);
    label[i] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      c.points.push_back(points[cur]);
      for (int j = 0; j < n; ++j) {
        if (label[j] >= 0) continue;
        if ((points[cur] - points[j]).squaredNorm() <= tol2) {
          label[j] = id;
          stack.push_back(j);
        }
      }
    }
    if (static_cast<int>(c.points.size()) >= params.min_cluster_points) {
      c.recompute_stats();
      clusters.push_back(std::move(c));
    }
  }
  return clusters;
}

std::vector<Cluster> filter_clusters(const std::vector<Cluster>& clusters,
                                     const DetectorParams& params) {
  std::vector<Cluster> kept;
  for (const auto& c : clusters) {
    if ((c.bbox_dims.array() > params.panel_max_dims.array()).any()) continue;
    if (!params.arena_bounds.contains(c.centroid.head<2>())) continue;
    if (c.centroid.z() <= params.min_mean_height) continue;
    kept.push_back(c);
  }
  return kept;
}

std::vector<Cluster> track_clusters(std::vector<Cluster> tracks, const std::vector<Cluster>& fresh,
                                    double now, double gate, double timeout, int& next_track_id) {
  std::vector<bool> used(fresh.size(), false);

  for (auto& track : tracks) {
    int best = -1;
    double best_d2 = gate * gate;
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      if (used[j]) continue;
      double d2 = (fresh[j].centroid - track.centroid).squaredNorm();
      if (d2 <= best_d2) {
        best_d2 = d2;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used[best] = true;
      double w = 1.0 / (track.observations + 1);
      track.centroid = (1.0 - w) * track.centroid + w * fresh[best].centroid;
      track.points = fresh[best].points;
      track.bbox_dims = fresh[best].bbox_dims;
      track.observations += 1;
      track.last_seen = now;
    }
  }

  for (std::size_t j = 0; j < fresh.size(); ++j) {
    if (used[j]) continue;
    Cluster t = fresh[j];
    t.track_id = next_track_id++;
    t.first_seen = now;
    t.last_seen = now;
    t.observations = 1;
    tracks.push_back(std::move(t));
  }

  tracks.erase(std::remove_if(tracks.begin(), tracks.end(),
                              [&](const Cluster& t) { return now - t.last_seen > timeout; }),
               tracks.end());
  return tracks;
}

const Cluster* ClusterTracker::best_confirmed(const Eigen::Vector2d& from,
                                              int min_observations) const {
  const Cluster* best = nullptr;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (const auto& t : tracks_) {
    if (t.observations < min_observations) continue;
    double d2 = (t.centroid.head<2>() - from).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = &t;
    }
  }
  return best;
}

}  // namespace omni::detect
