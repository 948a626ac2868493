#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace geopair {

inline void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

[[noreturn]] inline void fail(const std::string& message) {
  throw std::runtime_error(message);
}

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace geopair
