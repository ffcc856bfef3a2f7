#pragma once

namespace lnoi {

inline constexpr double kPi = 3.14159265358979323846;

// Speed of light in um/s; all wavevectors are rad/um, frequencies rad/s.
inline constexpr double kSpeedOfLight = 2.99792458e14;

inline double omega_from_wavelength_um(double lambda_um) {
    return 2.0 * kPi * kSpeedOfLight / lambda_um;
}

inline double wavelength_um_from_omega(double omega) {
    return 2.0 * kPi * kSpeedOfLight / omega;
}

inline double um_from_nm(double nm) { return nm * 1e-3; }
inline double nm_from_um(double um) { return um * 1e3; }

}  // namespace lnoi
