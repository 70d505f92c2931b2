#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace platekit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kFreeSpaceImpedance = 376.730;  // ohm

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

struct SinCos {
  double s;
  double c;
};

/// sin and cos that are exact on multiples of 90 degrees, where std::cos of
/// the rounded radian value leaves a residue of order 1e-16.
inline SinCos sincos_exact(double angle) {
  const double quarters = std::nearbyint(angle / (kPi / 2));
  if (std::abs(angle - quarters * (kPi / 2)) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(angle)) {
    switch (static_cast<long long>(quarters) & 3) {
      case 0: return {0.0, 1.0};
      case 1: return {1.0, 0.0};
      case 2: return {0.0, -1.0};
      default: return {-1.0, 0.0};
    }
  }
  return {std::sin(angle), std::cos(angle)};
}

inline double wavelength_from_frequency(double freq_hz) { return kSpeedOfLight / freq_hz; }

/// 10 log10(x). Zero maps to -inf, which callers treat as "no signal".
inline double to_db(double linear) {
  if (linear == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear);
}

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double dbm_to_mw(double dbm) { return from_db(dbm); }
inline double mw_to_dbm(double mw) { return to_db(mw); }

/// RCS in dB relative to 1 m^2.
inline double to_dbsm(double sigma_m2) { return to_db(sigma_m2); }

}  // namespace platekit
