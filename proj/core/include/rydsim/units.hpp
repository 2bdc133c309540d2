#pragma once

// Unit conventions. All internal computation uses angular frequencies in
// rad/s and times in seconds. Ordinary frequencies (Hz, kHz, MHz) appear
// only at I/O boundaries and are converted with the helpers below.

#include <numbers>

namespace rydsim {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double rad_per_s_from_hz(double f_hz) { return two_pi * f_hz; }
constexpr double rad_per_s_from_khz(double f_khz) { return two_pi * 1e3 * f_khz; }
constexpr double rad_per_s_from_mhz(double f_mhz) { return two_pi * 1e6 * f_mhz; }

constexpr double hz_from_rad_per_s(double w) { return w / two_pi; }
constexpr double mhz_from_rad_per_s(double w) { return w / (two_pi * 1e6); }

// Wrap an angle to (-pi, pi].
double wrap_angle(double x);

}  // namespace rydsim
