#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "satcluster/core/constants.hpp"

namespace satcluster {

/// Free-space optical terminal. Gain defaults to the aperture formula with
/// kDefaultApertureEfficiency unless gain_db_override is set. other_loss_db
/// is the whole-link implementation loss and is read from the transmit side.
struct OpticalTerminal {
    double tx_power_w = 5.0;
    double wavelength_m = 1.55e-6;
    double aperture_diameter_m = 0.1;
    std::optional<double> gain_db_override;  // when unset, computed from aperture
    double other_loss_db = 3.0;

    void validate() const {
        if (!(tx_power_w > 0.0) || !(aperture_diameter_m > 0.0))
            throw std::invalid_argument("OpticalTerminal: power and aperture must be positive");
        if (!(wavelength_m >= 1e-6 && wavelength_m <= 2e-6))
            throw std::invalid_argument("OpticalTerminal: wavelength outside supported band");
        if (other_loss_db < 0.0)
            throw std::invalid_argument("OpticalTerminal: other_loss_db must be >= 0");
    }
};

// back-solved so an ideal 10 cm aperture (106.1 dB) lands at 105.1 dB
inline constexpr double kDefaultApertureEfficiency = 0.7943282347242815;  // 10^(-0.1)

/// Aperture antenna gain, 10*log10(eff*(pi*D/lambda)^2) dB.
inline double antenna_gain_db(double aperture_diameter_m, double wavelength_m,
                              double efficiency = kDefaultApertureEfficiency) {
    if (!(aperture_diameter_m > 0.0) || !(wavelength_m > 0.0))
        throw std::domain_error("antenna_gain_db: inputs must be positive");
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw std::domain_error("antenna_gain_db: efficiency must be in (0, 1]");
    const double x = constants::kPi * aperture_diameter_m / wavelength_m;
    return 10.0 * std::log10(efficiency * x * x);
}

inline double terminal_gain_db(const OpticalTerminal& t) {
    if (t.gain_db_override) return *t.gain_db_override;
    return antenna_gain_db(t.aperture_diameter_m, t.wavelength_m);
}

/// Full-angle diffraction divergence, theta = 1.22*lambda/D.
inline double beam_divergence_rad(double aperture_diameter_m, double wavelength_m) {
    if (!(aperture_diameter_m > 0.0) || !(wavelength_m > 0.0))
        throw std::domain_error("beam_divergence_rad: inputs must be positive");
    return 1.22 * wavelength_m / aperture_diameter_m;
}

/// Beam spot diameter after propagating distance_m.
inline double spot_diameter_m(double aperture_diameter_m, double wavelength_m, double distance_m) {
    return beam_divergence_rad(aperture_diameter_m, wavelength_m) * distance_m;
}

/// Confocal near-field link distance L = 2*pi*a^2/lambda for a symmetric
/// system with beam radius a at each optic. Within L the beam stays
/// collimated between terminals and the far-field budget does not apply.
inline double near_field_limit_m(double beam_radius_at_optic_m, double wavelength_m) {
    if (!(beam_radius_at_optic_m > 0.0) || !(wavelength_m > 0.0))
        throw std::domain_error("near_field_limit_m: inputs must be positive");
    return 2.0 * constants::kPi * beam_radius_at_optic_m * beam_radius_at_optic_m / wavelength_m;
}

/// Photon energy h*c/lambda in joules.
inline double photon_energy_j(double wavelength_m) {
    if (!(wavelength_m > 0.0)) throw std::domain_error("photon_energy_j: wavelength must be > 0");
    return constants::kPlanck * constants::kSpeedOfLight / wavelength_m;
}

}  // namespace satcluster
