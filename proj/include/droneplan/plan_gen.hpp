#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "droneplan/rng.hpp"
#include "droneplan/route.hpp"

namespace droneplan {

// Routes from one construction run; visit sets are pairwise disjoint and
// together cover every requested customer.
struct Partition {
    std::vector<Route> routes;
};

// Instrumentation for the complexity assertion: candidate feasibility scans
// performed during one run.
struct PartitionStats {
    std::uint64_t candidate_visits = 0;
    std::uint64_t energy_checks = 0;
};

// Candidate plans of one agent; exactly k entries, padded with empty routes
// when a run produced fewer routes than agents.
struct PlanSet {
    int agent_index = 0;
    std::vector<Route> plans;
    std::vector<double> local_costs;  // negated savings, one per plan
};

// One randomized nearest-neighbor construction over the given customers:
// open a UAV on a uniformly random seed customer, then repeatedly extend
// with the nearest unassigned customer that fits the remaining capacity and
// leaves enough battery for the return leg; when none fits, close the route
// and open the next UAV. Throws infeasible_error if some customer cannot be
// served even as a sole delivery.
Partition generate_partition(const Instance& inst,
                             const DistanceMatrix& dmat,
                             std::span<const int> customers,
                             Rng& rng,
                             PartitionStats* stats = nullptr);

// Whole-instance convenience overload.
Partition generate_partition(const Instance& inst, const DistanceMatrix& dmat, Rng& rng,
                             PartitionStats* stats = nullptr);

// k independent runs (sub-seeded from rng_seed, parallelized); the i-th route
// of run r becomes plan r of agent i. Agent count is the maximum route count
// over the runs.
std::vector<PlanSet> generate_plan_sets(const Instance& inst,
                                        const DistanceMatrix& dmat,
                                        int k,
                                        std::span<const int> customers,
                                        std::uint64_t rng_seed);

std::vector<PlanSet> generate_plan_sets(const Instance& inst, const DistanceMatrix& dmat, int k,
                                        std::uint64_t rng_seed);

}  // namespace droneplan
