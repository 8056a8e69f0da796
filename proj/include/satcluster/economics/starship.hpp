#pragma once

#include <stdexcept>

namespace satcluster {

/// Parametric heavy-lift cost model. vehicle_cost_usd defaults to the value
/// back-solved so the no-reuse configuration lands at $460/kg with the $8/kg
/// fuel floor and a 200 t payload.
struct StarshipCostModel {
    double payload_kg = 200000.0;
    double vehicle_cost_usd = 90.4e6;
    int reuse_count = 1;
    double refurb_fraction_per_flight = 0.01;
    double fuel_usd_per_kg_payload = 8.0;
    double ops_usd_per_flight = 0.0;

    void validate() const {
        if (!(payload_kg > 0.0))
            throw std::invalid_argument("StarshipCostModel: payload must be positive");
        if (reuse_count < 1) throw std::invalid_argument("StarshipCostModel: reuse_count >= 1");
        if (refurb_fraction_per_flight < 0.0 || fuel_usd_per_kg_payload < 0.0 ||
            ops_usd_per_flight < 0.0 || vehicle_cost_usd < 0.0)
            throw std::invalid_argument("StarshipCostModel: costs must be non-negative");
    }
};

struct StarshipCostBreakdown {
    double vehicle_usd_per_kg = 0.0;  // vehicle amortized over reuse_count flights
    double refurb_usd_per_kg = 0.0;   // refurbishment for flights after the first
    double ops_usd_per_kg = 0.0;
    double fuel_usd_per_kg = 0.0;
    double total_usd_per_kg = 0.0;
};

inline StarshipCostBreakdown starship_cost_per_kg(const StarshipCostModel& m) {
    m.validate();
    StarshipCostBreakdown b;
    const double flights = static_cast<double>(m.reuse_count);
    b.vehicle_usd_per_kg = m.vehicle_cost_usd / flights / m.payload_kg;
    b.refurb_usd_per_kg =
        m.refurb_fraction_per_flight * m.vehicle_cost_usd * (flights - 1.0) / flights / m.payload_kg;
    b.ops_usd_per_kg = m.ops_usd_per_flight / m.payload_kg;
    b.fuel_usd_per_kg = m.fuel_usd_per_kg_payload;
    b.total_usd_per_kg =
        b.vehicle_usd_per_kg + b.refurb_usd_per_kg + b.ops_usd_per_kg + b.fuel_usd_per_kg;
    return b;
}

}  // namespace satcluster
