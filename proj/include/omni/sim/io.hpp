#pragma once

#include <string>

#include "omni/sim/depth.hpp"
#include "omni/sim/lidar.hpp"

namespace omni::sim {

// Flat binary scan format: ASCII magic "OVSCAN1\n", a small header of
// little-endian uint32/float32 fields, then per-ring float32 payloads.
void save_scan(const Scan& scan, const std::string& path);
Scan load_scan(const std::string& path);

// Debug CSV: ring,index,azimuth,elevation,range
void save_scan_csv(const Scan& scan, const std::string& path);

// Flat binary depth format: magic "OVDEPTH1\n" + header + float32 pixels.
void save_depth(const DepthFrame& frame, const std::string& path);
DepthFrame load_depth(const std::string& path);

// Debug CSV: row,col,depth (valid pixels only)
void save_depth_csv(const DepthFrame& frame, const std::string& path);

}  // namespace omni::sim
