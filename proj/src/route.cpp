#include "droneplan/route.hpp"

#include <string>
#include <unordered_set>

namespace droneplan {

std::vector<std::uint8_t> Route::visit_vector(std::size_t n) const {
    std::vector<std::uint8_t> v(n, 0);
    for (int id : visit_sequence) {
        v[static_cast<std::size_t>(id) - 1] = 1;
    }
    return v;
}

RouteScore score_route(const std::vector<int>& visit_sequence,
                       const Instance& inst,
                       const DistanceMatrix& dmat,
                       double service_time_s) {
    const std::size_t n = inst.customer_count();
    std::unordered_set<int> seen;
    for (int id : visit_sequence) {
        if (id == 0) {
            throw malformed_route_error("route visits the depot mid-sequence");
        }
        if (id < 1 || static_cast<std::size_t>(id) > n) {
            throw malformed_route_error("route visits unknown node " + std::to_string(id));
        }
        if (!seen.insert(id).second) {
            throw malformed_route_error("route visits customer " + std::to_string(id) + " twice");
        }
    }

    RouteScore score;
    if (visit_sequence.empty()) {
        return score;
    }

    double payload = 0.0;
    for (int id : visit_sequence) payload += inst.customer(id).package_weight_kg;

    int prev = 0;  // depot
    double clock_s = 0.0;
    for (int id : visit_sequence) {
        const Customer& cust = inst.customer(id);
        const double d = dmat(static_cast<std::size_t>(prev), static_cast<std::size_t>(id));

        LegMetrics leg;
        leg.distance_m = d;
        leg.energy_joule = leg_energy(d, payload, inst.uav, inst.env);
        leg.elapsed_s = d / inst.uav.speed_mps;
        score.legs.push_back(leg);

        clock_s += leg.elapsed_s;

        DeliveryRecord rec;
        rec.customer_id = id;
        rec.arrival_s = clock_s;
        rec.discount = discount_factor(clock_s, inst.econ);
        rec.savings = arc_savings(cust, d, dmat(0, static_cast<std::size_t>(id)), clock_s, inst.econ);
        score.deliveries.push_back(rec);

        score.total_distance_m += d;
        score.total_energy_joule += leg.energy_joule;
        score.savings += rec.savings.net;

        payload -= cust.package_weight_kg;
        clock_s += service_time_s;
        prev = id;
    }

    // Return leg: flies empty, consumes energy, earns and costs nothing.
    const double back = dmat(static_cast<std::size_t>(prev), 0);
    LegMetrics leg;
    leg.distance_m = back;
    leg.energy_joule = leg_energy(back, 0.0, inst.uav, inst.env);
    leg.elapsed_s = back / inst.uav.speed_mps;
    score.legs.push_back(leg);
    score.total_distance_m += back;
    score.total_energy_joule += leg.energy_joule;

    clock_s += leg.elapsed_s;
    score.total_time_s = clock_s;
    return score;
}

Route make_route(int uav_index,
                 std::vector<int> visit_sequence,
                 const Instance& inst,
                 const DistanceMatrix& dmat,
                 double service_time_s) {
    Route r;
    r.uav_index = uav_index;
    const RouteScore score = score_route(visit_sequence, inst, dmat, service_time_s);
    r.visit_sequence = std::move(visit_sequence);
    r.total_distance_m = score.total_distance_m;
    r.total_energy_joule = score.total_energy_joule;
    r.savings = score.savings;
    return r;
}

}  // namespace droneplan
