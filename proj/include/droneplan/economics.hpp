#pragma once

#include "droneplan/instance.hpp"

namespace droneplan {

// Net operator savings for delivering one package over one arc.
struct SavingsBreakdown {
    double revenue = 0.0;         // p_j * r_j
    double transport_cost = 0.0;  // k * w_j * d_ij
    double net = 0.0;
};

// Full price of a delivery: proportional to package weight and depot distance.
inline double base_price(const Customer& customer, double depot_distance_m,
                         const EconomicParams& econ) {
    return econ.price_constant_k * customer.package_weight_kg * depot_distance_m;
}

// Step discount by delivery time: full price up to the first threshold
// (closed boundary), then each later tier in turn.
inline double discount_factor(double delivery_time_s, const EconomicParams& econ) {
    std::size_t tier = 0;
    while (tier < econ.tier_times_s.size() && delivery_time_s > econ.tier_times_s[tier]) {
        ++tier;
    }
    return econ.discount_tiers[tier];
}

// Savings for the arc into customer j: time-discounted revenue minus the
// cost of hauling j's package over the arc.
inline SavingsBreakdown arc_savings(const Customer& to_customer, double arc_distance_m,
                                    double depot_distance_m, double arrival_time_s,
                                    const EconomicParams& econ) {
    SavingsBreakdown s;
    s.revenue = base_price(to_customer, depot_distance_m, econ) *
                discount_factor(arrival_time_s, econ);
    s.transport_cost = econ.price_constant_k * to_customer.package_weight_kg * arc_distance_m;
    s.net = s.revenue - s.transport_cost;
    return s;
}

}  // namespace droneplan
