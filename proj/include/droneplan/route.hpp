#pragma once

#include <cstdint>
#include <vector>

#include "droneplan/economics.hpp"
#include "droneplan/energy.hpp"
#include "droneplan/geo.hpp"
#include "droneplan/instance.hpp"

namespace droneplan {

// One flown leg at constant speed and constant payload.
struct LegMetrics {
    double distance_m = 0.0;
    double energy_joule = 0.0;
    double elapsed_s = 0.0;
};

// Scoring detail for one delivered package.
struct DeliveryRecord {
    int customer_id = 0;
    double arrival_s = 0.0;
    double discount = 1.0;
    SavingsBreakdown savings;
};

// One candidate plan: an ordered customer visit sequence with the depot
// implicit at both ends, plus cached mission metrics.
struct Route {
    int uav_index = 0;
    std::vector<int> visit_sequence;
    double total_distance_m = 0.0;
    double total_energy_joule = 0.0;
    double savings = 0.0;

    bool empty() const { return visit_sequence.empty(); }

    // Dense 0/1 indicator over customers 1..n; entry i is 1 iff customer i+1
    // is visited. Materialized on demand, the sequence itself stays sparse.
    std::vector<std::uint8_t> visit_vector(std::size_t n) const;
};

struct RouteScore {
    double total_distance_m = 0.0;
    double total_energy_joule = 0.0;
    double total_time_s = 0.0;
    double savings = 0.0;
    std::vector<LegMetrics> legs;            // one per leg, return leg included
    std::vector<DeliveryRecord> deliveries;  // one per visited customer
};

// From-scratch scoring of a depot-to-depot visit sequence. All packages are
// aboard at launch; payload drops at each node; the return leg flies empty
// and earns nothing. Throws malformed_route_error on depot mid-sequence or
// duplicate ids.
RouteScore score_route(const std::vector<int>& visit_sequence,
                       const Instance& inst,
                       const DistanceMatrix& dmat,
                       double service_time_s = 0.0);

// score_route + cached fields in one Route value.
Route make_route(int uav_index,
                 std::vector<int> visit_sequence,
                 const Instance& inst,
                 const DistanceMatrix& dmat,
                 double service_time_s = 0.0);

}  // namespace droneplan
