#include "omni/detect/detector.hpp"

#include <algorithm>
#include <cmath>

#include "omni/errors.hpp"

namespace omni::detect {

namespace {

int next_odd_at_least(double x) {
  int n = static_cast<int>(std::ceil(x - 1e-12));
  if (n % 2 == 0) ++n;
  return n;
}

// Median over a circular window of odd size k centered at i.
double circular_median(const std::vector<double>& values, int i, int k, std::vector<double>& buf) {
  const int n = static_cast<int>(values.size());
  const int half = k / 2;
  buf.clear();
  for (int d = -half; d <= half; ++d) {
    int idx = i + d;
    idx %= n;
    if (idx < 0) idx += n;
    buf.push_back(values[idx]);
  }
  auto mid = buf.begin() + k / 2;
  std::nth_element(buf.begin(), mid, buf.end());
  return *mid;
}

}  // namespace

KernelSizes kernel_sizes(double object_width, double distance, double azimuth_step,
                         double background_factor) {
  if (distance <= 0.0) throw InvalidInput("kernel_sizes: distance must be positive");
  if (object_width <= 0.0 || azimuth_step <= 0.0)
    throw InvalidInput("kernel_sizes: width and azimuth step must be positive");

  double beta = std::atan(0.5 * object_width / distance);
  int n = static_cast<int>(std::lround(2.0 * beta / azimuth_step));
  KernelSizes k;
  k.noise_k = std::max(next_odd_at_least(2.0 * n), 3);
  k.background_k = next_odd_at_least(background_factor * k.noise_k);
  if (k.background_k <= k.noise_k) k.background_k = k.noise_k + 2;
  return k;
}

std::vector<int> detect_ring(const sim::ScanRing& ring, double max_range,
                             const DetectorParams& params, double azimuth_step) {
  const int n = static_cast<int>(ring.ranges.size());
  std::vector<int> hits;
  if (n == 0) return hits;

  std::vector<double> buf;
  buf.reserve(512);
  for (int i = 0; i < n; ++i) {
    double range = ring.ranges[i];
    if (range >= max_range) continue;  // no-return sentinel

    KernelSizes k = kernel_sizes(params.object_width, range, azimuth_step,
                                 params.background_factor);
    // clamp to the ring length, keeping sizes odd and ordered
    int max_k = n % 2 == 0 ? n - 1 : n;
    k.noise_k = std::min(k.noise_k, max_k);
    k.background_k = std::min(k.background_k, max_k);
    if (k.background_k <= k.noise_k) continue;  // cannot discriminate at this range

    double m_noise = circular_median(ring.ranges, i, k.noise_k, buf);
    double m_bg = circular_median(ring.ranges, i, k.background_k, buf);
    if (m_noise < m_bg && m_bg - m_noise > params.response_threshold) hits.push_back(i);
  }
  return hits;
}

std::vector<Eigen::Vector3d> detect_scan(const sim::Scan& scan, const DetectorParams& params) {
  std::vector<Eigen::Vector3d> points;
  for (std::size_t r = 0; r < scan.rings.size(); ++r) {
    const auto& ring = scan.rings[r];
    if (ring.azimuths.size() < 2) continue;
    double step = ring.azimuths[1] - ring.azimuths[0];
    for (int idx : detect_ring(ring, scan.max_range, params, step))
      points.push_back(sim::ring_point_world(scan, static_cast<int>(r), idx));
  }
  return points;
}

}  // namespace omni::detect
