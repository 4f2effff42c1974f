#include "omni/sim/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

#include "omni/errors.hpp"

namespace omni::sim {

namespace {

// All binary payloads are little-endian; this codebase targets LE hosts.
void write_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_f32(std::ostream& out, float v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_f32s(std::ostream& out, const std::vector<double>& vs) {
  for (double v : vs) write_f32(out, static_cast<float>(v));
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}
float read_f32(std::istream& in) {
  float v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}

void expect_magic(std::istream& in, const char* magic) {
  std::string buf(std::strlen(magic), '\0');
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!in || buf != magic) throw IoError("bad file magic");
}

void write_iso(std::ostream& out, const Eigen::Isometry3d& pose) {
  const Eigen::Matrix4d m = pose.matrix();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) write_f32(out, static_cast<float>(m(r, c)));
}

Eigen::Isometry3d read_iso(std::istream& in) {
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = read_f32(in);
  Eigen::Isometry3d pose;
  pose.matrix() = m;
  return pose;
}

}  // namespace

void save_scan(const Scan& scan, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scan file: " + path);
  out << "OVSCAN1\n";
  write_u32(out, static_cast<std::uint32_t>(scan.rings.size()));
  write_u32(out, scan.rings.empty() ? 0u : static_cast<std::uint32_t>(scan.rings[0].ranges.size()));
  write_f32(out, static_cast<float>(scan.timestamp));
  write_f32(out, static_cast<float>(scan.max_range));
  write_iso(out, scan.sensor_pose);
  for (const auto& ring : scan.rings) {
    write_f32(out, static_cast<float>(ring.elevation));
    write_f32s(out, ring.azimuths);
    write_f32s(out, ring.ranges);
  }
}

Scan load_scan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scan file: " + path);
  expect_magic(in, "OVSCAN1\n");
  Scan scan;
  std::uint32_t rings = read_u32(in);
  std::uint32_t samples = read_u32(in);
  scan.timestamp = read_f32(in);
  scan.max_range = read_f32(in);
  scan.sensor_pose = read_iso(in);
  scan.rings.resize(rings);
  for (auto& ring : scan.rings) {
    ring.elevation = read_f32(in);
    ring.azimuths.resize(samples);
    ring.ranges.resize(samples);
    for (auto& a : ring.azimuths) a = read_f32(in);
    for (auto& r : ring.ranges) r = read_f32(in);
  }
  if (!in) throw IoError("truncated scan file: " + path);
  return scan;
}

void save_scan_csv(const Scan& scan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scan csv: " + path);
  out << "ring,index,azimuth,elevation,range\n";
  char line[128];
  for (std::size_t r = 0; r < scan.rings.size(); ++r) {
    const auto& ring = scan.rings[r];
    for (std::size_t i = 0; i < ring.ranges.size(); ++i) {
      std::snprintf(line, sizeof(line), "%zu,%zu,%.9g,%.9g,%.9g\n", r, i, ring.azimuths[i],
                    ring.elevation, ring.ranges[i]);
      out << line;
    }
  }
}

void save_depth(const DepthFrame& frame, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write depth file: " + path);
  out << "OVDEPTH1\n";
  write_u32(out, static_cast<std::uint32_t>(frame.width));
  write_u32(out, static_cast<std::uint32_t>(frame.height));
  write_f32(out, static_cast<float>(frame.focal));
  write_f32(out, static_cast<float>(frame.cx));
  write_f32(out, static_cast<float>(frame.cy));
  write_iso(out, frame.camera_pose);
  for (float d : frame.depth) write_f32(out, d);
}

DepthFrame load_depth(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open depth file: " + path);
  expect_magic(in, "OVDEPTH1\n");
  DepthFrame f;
  f.width = static_cast<int>(read_u32(in));
  f.height = static_cast<int>(read_u32(in));
  f.focal = read_f32(in);
  f.cx = read_f32(in);
  f.cy = read_f32(in);
  f.camera_pose = read_iso(in);
  f.depth.resize(static_cast<std::size_t>(f.width) * f.height);
  for (auto& d : f.depth) d = read_f32(in);
  if (!in) throw IoError("truncated depth file: " + path);
  return f;
}

void save_depth_csv(const DepthFrame& frame, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write depth csv: " + path);
  out << "row,col,depth\n";
  char line[64];
  for (int r = 0; r < frame.height; ++r)
    for (int c = 0; c < frame.width; ++c)
      if (DepthFrame::valid(frame.at(r, c))) {
        std::snprintf(line, sizeof(line), "%d,%d,%.9g\n", r, c, frame.at(r, c));
        out << line;
      }
}

}  // namespace omni::sim
