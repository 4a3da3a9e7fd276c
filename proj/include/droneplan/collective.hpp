#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "droneplan/plan_gen.hpp"
#include "droneplan/rng.hpp"

namespace droneplan {

// One position in the balanced binary selection tree.
struct AgentNode {
    int agent_index = -1;  // index into the plan-set list
    int parent = -1;
    int children[2] = {-1, -1};
    int child_count = 0;
};

// Balanced binary tree over all agents with a seeded random placement.
// Stored in heap layout: node p has children 2p+1 and 2p+2.
class Tree {
  public:
    Tree(std::size_t num_agents, Rng& rng);

    std::span<const AgentNode> nodes() const { return nodes_; }

    // Every child precedes its parent: the per-pass processing order.
    std::span<const int> post_order() const { return post_order_; }

    int root() const { return 0; }

    std::size_t depth() const;

  private:
    std::vector<AgentNode> nodes_;
    std::vector<int> post_order_;
};

Tree build_tree(std::size_t num_agents, Rng& rng);

struct EngineConfig {
    int iterations = 50;
    double lambda = 0.0;  // 0 = pure global cost, 1 = pure local cost
    int plans_per_agent = 10;
    std::uint64_t seed = 1;

    void validate() const;
};

// Element-wise sum of the selected plans plus its costs.
struct GlobalResponse {
    std::vector<double> aggregate;  // length n, entry i counts visits to customer i+1
    double total_local_cost = 0.0;
    double global_cost = 0.0;
};

struct Selection {
    std::vector<int> plan_index;  // one per agent
    GlobalResponse response;
};

// Squared deviation of the visit-count aggregate from the target; zero iff
// every customer is selected exactly once.
double global_cost(std::span<const double> aggregate, std::span<const double> target);

// Called with the accepted state after every learning round.
using RoundObserver = std::function<void(int round, const Selection& accepted)>;

// Iterative tree selection: per round a bottom-up pass in which each agent
// re-selects the plan minimizing (1-lambda) * global cost + lambda *
// min-max-normalized local cost, seeing its children's this-round subtree
// aggregates and the previous round's response for the rest of the system.
// Agents start on their locally preferred plans and the root accepts a round
// only if the global cost does not increase, so the accepted cost sequence
// is non-increasing and never worse than the uncoordinated selection.
Selection epos_select(const std::vector<PlanSet>& plan_sets,
                      std::size_t n_universe,
                      std::span<const int> active_ids,
                      const EngineConfig& config,
                      const RoundObserver& observer = {});

// Baseline: every agent independently takes its cheapest plan (maximum
// savings), lowest index on ties.
Selection uncoordinated_select(const std::vector<PlanSet>& plan_sets,
                               std::size_t n_universe,
                               std::span<const int> active_ids);

}  // namespace droneplan
