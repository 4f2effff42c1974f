#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace omni {

// Minimal 3D kd-tree for nearest-neighbour queries on a fixed point set.
class KdTree3 {
 public:
  KdTree3() = default;

  explicit KdTree3(std::vector<Eigen::Vector3d> points) : points_(std::move(points)) {
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0);
    if (!order_.empty()) build(0, static_cast<int>(order_.size()), 0);
  }

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<Eigen::Vector3d>& points() const { return points_; }

  struct Result {
    int index = -1;
    double sq_dist = std::numeric_limits<double>::infinity();
  };

  // Nearest point to q; if max_dist is finite, only matches within it count.
  Result nearest(const Eigen::Vector3d& q,
                 double max_dist = std::numeric_limits<double>::infinity()) const {
    Result best;
    best.sq_dist = max_dist * max_dist;
    if (!order_.empty()) search(q, 0, static_cast<int>(order_.size()), 0, best);
    if (best.index < 0) best.sq_dist = std::numeric_limits<double>::infinity();
    return best;
  }

 private:
  void build(int lo, int hi, int depth) {
    if (hi - lo <= 1) return;
    int axis = depth % 3;
    int mid = (lo + hi) / 2;
    std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                     [&](int a, int b) { return points_[a][axis] < points_[b][axis]; });
    build(lo, mid, depth + 1);
    build(mid + 1, hi, depth + 1);
  }

  void search(const Eigen::Vector3d& q, int lo, int hi, int depth, Result& best) const {
    if (hi <= lo) return;
    int axis = depth % 3;
    int mid = (lo + hi) / 2;
    const Eigen::Vector3d& p = points_[order_[mid]];
    double d2 = (p - q).squaredNorm();
    if (d2 <= best.sq_dist) {
      best.sq_dist = d2;
      best.index = order_[mid];
    }
    double delta = q[axis] - p[axis];
    int first_lo = delta < 0 ? lo : mid + 1;
    int first_hi = delta < 0 ? mid : hi;
    int second_lo = delta < 0 ? mid + 1 : lo;
    int second_hi = delta < 0 ? hi : mid;
    search(q, first_lo, first_hi, depth + 1, best);
    if (delta * delta <= best.sq_dist) search(q, second_lo, second_hi, depth + 1, best);
  }

  std::vector<Eigen::Vector3d> points_;
  std::vector<int> order_;
};

}  // namespace omni
