#pragma once

#include <cmath>
#include <numbers>

namespace tmsq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Reduces an angle into [0, 2pi).
inline double wrap_to_2pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

/// Reduces an angle into (-pi, pi].
inline double wrap_to_pi(double angle) {
  double w = wrap_to_2pi(angle);
  return w > kPi ? w - kTwoPi : w;
}

/// Distance between two angles measured on the unit circle, in [0, pi].
inline double circular_distance(double a, double b) { return std::abs(wrap_to_pi(a - b)); }

}  // namespace tmsq
