#include "droneplan/plan_gen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace droneplan {

namespace {

// Energy of the committed legs with the candidate's package retroactively
// aboard from launch, plus the candidate leg and its empty return. All
// packages load at the depot, so extending a route makes every earlier leg
// heavier; checking against the full tentative manifest is what keeps the
// final from-scratch route energy inside the battery.
double tentative_route_energy(const std::vector<double>& leg_dist,
                              const std::vector<double>& leg_weights,
                              double candidate_weight,
                              double candidate_dist,
                              double candidate_return_dist,
                              const UavSpec& uav,
                              const Environment& env) {
    double energy = 0.0;
    double suffix = candidate_weight;
    for (std::size_t l = leg_dist.size(); l-- > 0;) {
        suffix += leg_weights[l];
        energy += leg_dist[l] * energy_per_meter(uav.frame_mass_kg + uav.battery_mass_kg + suffix,
                                                 uav, env);
    }
    energy += leg_energy(candidate_dist, candidate_weight, uav, env);
    energy += leg_energy(candidate_return_dist, 0.0, uav, env);
    return energy;
}

void check_sole_trip_feasible(const Instance& inst, const DistanceMatrix& dmat,
                              std::span<const int> customers) {
    for (int id : customers) {
        const double d = dmat(0, static_cast<std::size_t>(id));
        const double w = inst.customer(id).package_weight_kg;
        const double round_trip =
            leg_energy(d, w, inst.uav, inst.env) + leg_energy(d, 0.0, inst.uav, inst.env);
        if (round_trip > inst.uav.battery_capacity_joule) {
            throw infeasible_error(
                id, "customer " + std::to_string(id) + " is unreachable: sole round trip needs " +
                        std::to_string(round_trip) + " J, battery holds " +
                        std::to_string(inst.uav.battery_capacity_joule) + " J");
        }
    }
}

}  // namespace

Partition generate_partition(const Instance& inst,
                             const DistanceMatrix& dmat,
                             std::span<const int> customers,
                             Rng& rng,
                             PartitionStats* stats) {
    check_sole_trip_feasible(inst, dmat, customers);

    std::vector<int> unassigned(customers.begin(), customers.end());
    Partition partition;

    std::vector<int> route_ids;
    std::vector<double> leg_dist;
    std::vector<double> leg_weights;

    while (!unassigned.empty()) {
        const std::size_t pick = rng.uniform_index(unassigned.size());
        const int seed_id = unassigned[pick];
        unassigned[pick] = unassigned.back();
        unassigned.pop_back();

        route_ids.assign(1, seed_id);
        leg_dist.assign(1, dmat(0, static_cast<std::size_t>(seed_id)));
        leg_weights.assign(1, inst.customer(seed_id).package_weight_kg);
        double payload_total = leg_weights[0];
        int cur = seed_id;

        for (;;) {
            int best_id = -1;
            std::size_t best_pos = 0;
            double best_dist = std::numeric_limits<double>::infinity();

            for (std::size_t pos = 0; pos < unassigned.size(); ++pos) {
                const int cand = unassigned[pos];
                if (stats) ++stats->candidate_visits;

                const double w = inst.customer(cand).package_weight_kg;
                if (payload_total + w > inst.uav.capacity_kg) continue;

                const double d = dmat(static_cast<std::size_t>(cur), static_cast<std::size_t>(cand));
                // Nearest wins, lowest id on a distance tie. Only candidates
                // that would improve the incumbent need the energy check, so
                // the expensive test runs O(log n) times per extension.
                if (d > best_dist || (d == best_dist && cand > best_id)) continue;

                if (stats) ++stats->energy_checks;
                const double energy = tentative_route_energy(
                    leg_dist, leg_weights, w, d,
                    dmat(static_cast<std::size_t>(cand), 0), inst.uav, inst.env);
                if (energy > inst.uav.battery_capacity_joule) continue;

                best_id = cand;
                best_pos = pos;
                best_dist = d;
            }

            if (best_id < 0) break;  // feasible set empty: close this route

            unassigned[best_pos] = unassigned.back();
            unassigned.pop_back();
            route_ids.push_back(best_id);
            leg_dist.push_back(best_dist);
            leg_weights.push_back(inst.customer(best_id).package_weight_kg);
            payload_total += leg_weights.back();
            cur = best_id;
        }

        partition.routes.push_back(
            make_route(static_cast<int>(partition.routes.size()), route_ids, inst, dmat));
    }

    return partition;
}

Partition generate_partition(const Instance& inst, const DistanceMatrix& dmat, Rng& rng,
                             PartitionStats* stats) {
    std::vector<int> all(inst.customer_count());
    std::iota(all.begin(), all.end(), 1);
    return generate_partition(inst, dmat, all, rng, stats);
}

std::vector<PlanSet> generate_plan_sets(const Instance& inst,
                                        const DistanceMatrix& dmat,
                                        int k,
                                        std::span<const int> customers,
                                        std::uint64_t rng_seed) {
    if (k < 1) {
        throw validation_error("plans per agent must be >= 1, got " + std::to_string(k));
    }

    std::vector<Partition> runs(static_cast<std::size_t>(k));
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto worker = [&](std::size_t begin, std::size_t step) {
        for (std::size_t r = begin; r < runs.size(); r += step) {
            if (failed.load(std::memory_order_relaxed)) return;
            try {
                Rng run_rng(rng_seed ^ static_cast<std::uint64_t>(r));
                runs[r] = generate_partition(inst, dmat, customers, run_rng);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true)) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    const std::size_t threads =
        std::min<std::size_t>(std::max<std::size_t>(1, std::thread::hardware_concurrency()),
                              runs.size());
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::size_t agents = 0;
    for (const Partition& p : runs) agents = std::max(agents, p.routes.size());

    std::vector<PlanSet> plan_sets(agents);
    for (std::size_t a = 0; a < agents; ++a) {
        PlanSet& ps = plan_sets[a];
        ps.agent_index = static_cast<int>(a);
        ps.plans.reserve(runs.size());
        ps.local_costs.reserve(runs.size());
        for (const Partition& run : runs) {
            if (a < run.routes.size()) {
                ps.plans.push_back(run.routes[a]);
            } else {
                Route empty;
                empty.uav_index = static_cast<int>(a);
                ps.plans.push_back(std::move(empty));
            }
            ps.local_costs.push_back(-ps.plans.back().savings);
        }
    }
    return plan_sets;
}

std::vector<PlanSet> generate_plan_sets(const Instance& inst, const DistanceMatrix& dmat, int k,
                                        std::uint64_t rng_seed) {
    std::vector<int> all(inst.customer_count());
    std::iota(all.begin(), all.end(), 1);
    return generate_plan_sets(inst, dmat, k, all, rng_seed);
}

}  // namespace droneplan
