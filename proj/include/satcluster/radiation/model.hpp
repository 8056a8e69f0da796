#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/radiation/poisson.hpp"

namespace satcluster {

// beam-test calibration constants
inline constexpr double kProtonsPerCm2PerRad = 9.6e6;
inline constexpr double kCrossSectionNumerator = 1.04e-7;  // cm^2 * rad / chip

/// One failure mode of the accelerator payload, calibrated from proton beam
/// statistics: a characteristic absorbed dose per event, the raw event count
/// behind it (0 when the source gives a point estimate only), and an
/// optional cumulative-dose failure threshold.
struct SusceptibilityProfile {
    std::string failure_mode;
    double characteristic_dose_rad_per_event = 0.0;
    int n_events_observed = 0;
    std::optional<double> tid_failure_threshold_rad;
    // cross-section reported by the source when it disagrees with the
    // formula-derived value; reports use the formula, this records the flag
    std::optional<double> reported_cross_section_cm2;

    void validate() const {
        if (failure_mode.empty())
            throw std::invalid_argument("SusceptibilityProfile: failure_mode required");
        if (!(characteristic_dose_rad_per_event > 0.0))
            throw std::invalid_argument("SusceptibilityProfile: characteristic dose must be > 0");
        if (n_events_observed < 0)
            throw std::invalid_argument("SusceptibilityProfile: negative event count");
    }
};

struct OrbitEnvironment {
    double dose_rate_rad_per_year = 150.0;
    double mission_years = 5.0;

    void validate() const {
        if (!(dose_rate_rad_per_year >= 0.0) || !(mission_years > 0.0))
            throw std::invalid_argument("OrbitEnvironment: rates must be non-negative, years > 0");
    }

    double mission_dose_rad() const { return dose_rate_rad_per_year * mission_years; }
};

inline double fluence_from_dose(double dose_rad) {
    if (dose_rad < 0.0) throw std::domain_error("fluence_from_dose: dose must be >= 0");
    return dose_rad * kProtonsPerCm2PerRad;
}

inline double cross_section_cm2(double characteristic_dose_rad) {
    if (!(characteristic_dose_rad > 0.0))
        throw std::domain_error("cross_section_cm2: characteristic dose must be > 0");
    return kCrossSectionNumerator / characteristic_dose_rad;
}

/// Beam-to-orbit transfer: events/year = dose rate / characteristic dose.
/// Assumes the beam-measured dose-to-event ratio carries over to the orbital
/// spectrum unchanged.
inline double event_rate_per_year(const SusceptibilityProfile& profile,
                                  const OrbitEnvironment& env) {
    profile.validate();
    env.validate();
    return env.dose_rate_rad_per_year / profile.characteristic_dose_rad_per_event;
}

struct FailureProbability {
    double probability = 0.0;
    bool saturated = false;
};

inline FailureProbability per_inference_failure(double rate_events_per_year,
                                                double inferences_per_year) {
    if (!(inferences_per_year > 0.0))
        throw std::domain_error("per_inference_failure: inference rate must be > 0");
    if (rate_events_per_year < 0.0)
        throw std::domain_error("per_inference_failure: negative event rate");
    FailureProbability fp;
    fp.probability = rate_events_per_year / inferences_per_year;
    if (fp.probability >= 1.0) {
        fp.probability = 1.0;
        fp.saturated = true;
    }
    return fp;
}

struct TidMargin {
    double margin = 0.0;  // threshold / mission dose
    bool pass = false;
};

inline TidMargin tid_margin(double threshold_rad, const OrbitEnvironment& env) {
    if (!(threshold_rad > 0.0)) throw std::domain_error("tid_margin: threshold must be > 0");
    env.validate();
    TidMargin m;
    m.margin = threshold_rad / env.mission_dose_rad();
    m.pass = m.margin >= 1.0;
    return m;
}

/// Bundled beam-test dataset. Event counts back the Poisson intervals; modes
/// without a published count carry 0 and get no interval. The SDC mode also
/// stores the source's cross-section, which disagrees with the formula value
/// (8.3e-10 vs 9.7e-10 cm^2); reports use the formula.
inline std::vector<SusceptibilityProfile> default_susceptibility_profiles() {
    return {
        {"HBM-UECC", 44.0, 203, 2000.0, {}},
        {"core-SEE", 150.0, 0, 15000.0, {}},
        {"SEFI", 5000.0, 0, 15000.0, {}},
        {"SDC", 107.0, 84, 15000.0, 8.3e-10},
        {"host-CPU-SEFI", 450.0, 0, 15000.0, {}},
        {"host-RAM-SEFI", 400.0, 0, 15000.0, {}},
    };
}

struct ModeRate {
    std::string failure_mode;
    double cross_section_cm2 = 0.0;
    double events_per_year = 0.0;
    double events_per_mission = 0.0;
    // 90% Poisson interval on events/year; equal to the point rate when no
    // event count is available
    double ci_low_per_year = 0.0;
    double ci_high_per_year = 0.0;
    std::optional<FailureProbability> per_inference;
    std::optional<TidMargin> tid;
};

struct SeeRateReport {
    OrbitEnvironment env;
    std::vector<ModeRate> modes;
};

inline SeeRateReport see_rate_report(const std::vector<SusceptibilityProfile>& profiles,
                                     const OrbitEnvironment& env,
                                     std::optional<double> inferences_per_year = {}) {
    env.validate();
    SeeRateReport rep;
    rep.env = env;
    for (const auto& p : profiles) {
        p.validate();
        ModeRate m;
        m.failure_mode = p.failure_mode;
        m.cross_section_cm2 = cross_section_cm2(p.characteristic_dose_rad_per_event);
        m.events_per_year = event_rate_per_year(p, env);
        m.events_per_mission = m.events_per_year * env.mission_years;
        if (p.n_events_observed > 0) {
            const auto ci = poisson_mean_interval(p.n_events_observed);
            // scale the count interval onto the rate estimate
            m.ci_low_per_year = m.events_per_year * ci.lower / p.n_events_observed;
            m.ci_high_per_year = m.events_per_year * ci.upper / p.n_events_observed;
        } else {
            m.ci_low_per_year = m.ci_high_per_year = m.events_per_year;
        }
        if (inferences_per_year)
            m.per_inference = per_inference_failure(m.events_per_year, *inferences_per_year);
        if (p.tid_failure_threshold_rad)
            m.tid = tid_margin(*p.tid_failure_threshold_rad, env);
        rep.modes.push_back(m);
    }
    return rep;
}

}  // namespace satcluster
