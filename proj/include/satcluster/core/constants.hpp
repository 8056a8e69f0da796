#pragma once

namespace satcluster::constants {

// WGS84 / EGM96 Earth model
inline constexpr double kMuEarth = 3.986004418e14;   // m^3/s^2
inline constexpr double kEarthRadius = 6378137.0;    // m, equatorial
inline constexpr double kJ2Earth = 1.08262668e-3;

// CODATA
inline constexpr double kPlanck = 6.62607015e-34;    // J*s
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

inline constexpr double kPi = 3.14159265358979323846;

// Tropical year; used both for sun-synchronous precession targets and for
// annualizing per-orbit quantities.
inline constexpr double kTropicalYearS = 365.2422 * 86400.0;

// Mean hours per year used for $/kWh -> $/kW/y conversions.
inline constexpr double kHoursPerYear = 8766.0;

}  // namespace satcluster::constants
