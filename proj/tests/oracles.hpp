#pragma once

// Independent reference implementations used only to check the library.
// Kept free of droneplan headers' internals on purpose: these recompute
// everything from first principles with different formulations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

// Great-circle distance via the atan2 formulation (the library uses asin).
inline double haversine_m(double lat1, double lon1, double lat2, double lon2) {
    constexpr double kPi = 3.14159265358979323846;
    constexpr double kR = 6371000.0;
    auto rad = [](double d) { return d * kPi / 180.0; };
    const double dlat = rad(lat2 - lat1);
    const double dlon = rad(lon2 - lon1);
    const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(rad(lat1)) * std::cos(rad(lat2)) * std::sin(dlon / 2) *
                         std::sin(dlon / 2);
    return kR * 2.0 * std::atan2(std::sqrt(a), std::sqrt(1.0 - a));
}

// Steady-flight power-per-meter, written with pow instead of sqrt chains.
inline double energy_per_meter(double mass_kg, double g = 9.81, double va = 10.0, double nr = 8.0,
                               double rho = 1.2250, double zeta = 0.27) {
    return std::pow(g * mass_kg, 1.5) / (va * std::sqrt(2.0 * nr * rho * zeta));
}

// Exhaustive search over every plan-index combination. Plans are given as
// 0/1 indicator rows; returns the minimum squared deviation from all-ones
// over the active entries.
struct BruteForceResult {
    double best_cost = 0.0;
    std::vector<std::vector<int>> optimal_choices;
};

inline double combo_cost(const std::vector<std::vector<std::vector<int>>>& agent_plans,
                         const std::vector<int>& choice, std::size_t n) {
    std::vector<int> agg(n, 0);
    for (std::size_t a = 0; a < choice.size(); ++a) {
        for (int id : agent_plans[a][static_cast<std::size_t>(choice[a])]) {
            ++agg[static_cast<std::size_t>(id) - 1];
        }
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = agg[i] - 1.0;
        cost += d * d;
    }
    return cost;
}

inline BruteForceResult brute_force(const std::vector<std::vector<std::vector<int>>>& agent_plans,
                                    std::size_t n) {
    BruteForceResult result;
    result.best_cost = std::numeric_limits<double>::infinity();
    const std::size_t agents = agent_plans.size();
    std::vector<int> choice(agents, 0);
    for (;;) {
        const double cost = combo_cost(agent_plans, choice, n);
        if (cost < result.best_cost) {
            result.best_cost = cost;
            result.optimal_choices.clear();
        }
        if (cost == result.best_cost) result.optimal_choices.push_back(choice);

        std::size_t pos = 0;
        while (pos < agents) {
            if (++choice[pos] < static_cast<int>(agent_plans[pos].size())) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == agents) break;
    }
    return result;
}

}  // namespace oracle
