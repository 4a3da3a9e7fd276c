#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "droneplan/geo.hpp"

namespace droneplan {

struct Customer {
    int id = 0;  // 1..n, 0 is reserved for the depot
    GeoPoint location;
    double package_weight_kg = 0.0;
};

struct UavSpec {
    double frame_mass_kg = 10.0;
    double battery_mass_kg = 10.0;
    double capacity_kg = 5.0;
    double battery_capacity_joule = 800.0 * 3600.0;  // 800 Wh
    double speed_mps = 10.0;
    double rotor_count = 8.0;
    double rotor_disc_area_m2 = 0.27;

    void validate() const;
};

struct Environment {
    double gravity_mps2 = 9.81;
    double air_density_kgm3 = 1.2250;

    void validate() const;
};

struct EconomicParams {
    // Money per (kg * m); 0.001 here is 1 money per kg*km.
    double price_constant_k = 0.001;
    std::vector<double> discount_tiers = {1.0, 1.0 / 2.0, 1.0 / 3.0};
    std::vector<double> tier_times_s = {600.0, 1200.0};

    void validate() const;
};

struct Instance {
    GeoPoint depot;
    std::vector<Customer> customers;  // customer with id i at index i-1
    UavSpec uav;
    Environment env;
    EconomicParams econ;
    std::uint64_t seed = 0;

    std::size_t customer_count() const { return customers.size(); }

    const Customer& customer(int id) const { return customers[static_cast<std::size_t>(id) - 1]; }

    void validate() const;
};

DistanceMatrix build_distance_matrix(const Instance& inst);

// n customers uniformly distributed (by area) within radius_m of the depot,
// weights drawn uniformly from weight_choices. Same seed, same instance.
Instance generate_instance(std::size_t n,
                           const GeoPoint& depot,
                           double radius_m,
                           const std::vector<double>& weight_choices,
                           const UavSpec& uav,
                           const Environment& env,
                           const EconomicParams& econ,
                           std::uint64_t seed);

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

// Serialized document bytes; save_instance writes exactly this.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

}  // namespace droneplan
