#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/core/constants.hpp"

namespace satcluster {

struct SatellitePlatform {
    std::string name;
    double mass_kg = 0.0;
    double power_kw = 0.0;
    double lifespan_years = 0.0;

    void validate() const {
        if (name.empty()) throw std::invalid_argument("SatellitePlatform: name required");
        if (!(mass_kg > 0.0) || !(power_kw > 0.0) || !(lifespan_years > 0.0))
            throw std::invalid_argument("SatellitePlatform: fields must be positive");
    }
};

/// Launch cost per kW of platform power, amortized over the platform's life.
inline double launched_power_price_usd_per_kw_year(const SatellitePlatform& platform,
                                                   double price_usd_per_kg) {
    platform.validate();
    if (!(price_usd_per_kg > 0.0))
        throw std::domain_error("launched_power_price: price must be positive");
    return platform.mass_kg * price_usd_per_kg / (platform.power_kw * platform.lifespan_years);
}

/// Solar array output: area x cell efficiency x insolation x packing.
inline double platform_power_estimate_kw(double panel_area_m2, double cell_efficiency,
                                         double insolation_kw_m2, double packing_fraction) {
    if (panel_area_m2 < 0.0 || !(insolation_kw_m2 > 0.0))
        throw std::domain_error("platform_power_estimate_kw: bad area or insolation");
    if (!(cell_efficiency > 0.0 && cell_efficiency <= 1.0) ||
        !(packing_fraction > 0.0 && packing_fraction <= 1.0))
        throw std::domain_error("platform_power_estimate_kw: fractions must be in (0, 1]");
    return panel_area_m2 * cell_efficiency * insolation_kw_m2 * packing_fraction;
}

/// LEO communications platforms with public mass/power figures.
inline std::vector<SatellitePlatform> default_platforms() {
    return {
        {"Starlink v2 mini", 575.0, 28.0, 5.0},
        {"Starlink v1", 260.0, 7.0, 5.0},
        {"OneWeb", 150.0, 0.8, 5.0},
        {"Iridium NEXT", 860.0, 2.0, 12.5},
    };
}

struct Table1Cell {
    std::string platform;
    double mass_kg = 0.0;
    double power_kw = 0.0;
    double lifespan_years = 0.0;
    double price_usd_per_kg = 0.0;
    double usd_per_kw_year = 0.0;
};

struct Table1Report {
    std::vector<Table1Cell> cells;  // platforms x price scenarios
    double min_usd_per_kw_year_at_last_price = 0.0;
    double max_usd_per_kw_year_at_last_price = 0.0;
};

/// Launched-power-price table over a set of platforms and $/kg scenarios;
/// the min/max summary covers the last (projected) price scenario.
inline Table1Report table1_report(const std::vector<SatellitePlatform>& platforms,
                                  const std::vector<double>& price_scenarios_usd_per_kg) {
    if (platforms.empty() || price_scenarios_usd_per_kg.empty())
        throw std::invalid_argument("table1_report: need platforms and price scenarios");
    Table1Report rep;
    rep.min_usd_per_kw_year_at_last_price = 1e300;
    for (const auto& platform : platforms) {
        for (const double price : price_scenarios_usd_per_kg) {
            Table1Cell cell;
            cell.platform = platform.name;
            cell.mass_kg = platform.mass_kg;
            cell.power_kw = platform.power_kw;
            cell.lifespan_years = platform.lifespan_years;
            cell.price_usd_per_kg = price;
            cell.usd_per_kw_year = launched_power_price_usd_per_kw_year(platform, price);
            rep.cells.push_back(cell);
            if (price == price_scenarios_usd_per_kg.back()) {
                rep.min_usd_per_kw_year_at_last_price =
                    std::min(rep.min_usd_per_kw_year_at_last_price, cell.usd_per_kw_year);
                rep.max_usd_per_kw_year_at_last_price =
                    std::max(rep.max_usd_per_kw_year_at_last_price, cell.usd_per_kw_year);
            }
        }
    }
    return rep;
}

/// Terrestrial datacenter power cost band, USD/kW/year = $/kWh x 8766 x PUE.
inline double terrestrial_power_price_usd_per_kw_year(double usd_per_kwh, double pue) {
    if (!(usd_per_kwh > 0.0) || !(pue >= 1.0))
        throw std::domain_error("terrestrial_power_price: price > 0 and PUE >= 1 required");
    return usd_per_kwh * constants::kHoursPerYear * pue;
}

}  // namespace satcluster
