#pragma once

#include <cmath>

#include "droneplan/instance.hpp"

namespace droneplan {

// Remaining battery and carried mass of a UAV mid-route.
struct EnergyState {
    double remaining_joule = 0.0;
    double payload_kg = 0.0;
};

// Steady-flight energy per meter, (g*M)^(3/2) / (v_a * sqrt(2 * n_r * rho * zeta)),
// where M is the full takeoff mass (frame + battery + payload).
inline double energy_per_meter(double total_mass_kg, const UavSpec& uav, const Environment& env) {
    const double gm = env.gravity_mps2 * total_mass_kg;
    const double denom =
        uav.speed_mps * std::sqrt(2.0 * uav.rotor_count * env.air_density_kgm3 * uav.rotor_disc_area_m2);
    return gm * std::sqrt(gm) / denom;
}

// Energy for one leg flown at constant payload; packages drop only at nodes.
inline double leg_energy(double distance_m, double payload_kg, const UavSpec& uav, const Environment& env) {
    const double total_mass = uav.frame_mass_kg + uav.battery_mass_kg + payload_kg;
    return distance_m * energy_per_meter(total_mass, uav, env);
}

}  // namespace droneplan
