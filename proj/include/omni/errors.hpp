#pragma once

#include <stdexcept>
#include <string>

namespace omni {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateRegistration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegistrationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GpsStale : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDetections : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelectionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegionMissing : std::runtime_error {
  enum class Which { Mouth, Stem };
  RegionMissing(Which which, const std::string& msg) : std::runtime_error(msg), which(which) {}
  Which which;
};

struct TipsNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidKeyframe : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace omni
