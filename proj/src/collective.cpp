#include "droneplan/collective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace droneplan {

Tree::Tree(std::size_t num_agents, Rng& rng) {
    if (num_agents == 0) {
        throw validation_error("tree needs at least one agent");
    }
    std::vector<int> perm(num_agents);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);

    nodes_.resize(num_agents);
    const int n = static_cast<int>(num_agents);
    for (int p = 0; p < n; ++p) {
        AgentNode& node = nodes_[static_cast<std::size_t>(p)];
        node.agent_index = perm[static_cast<std::size_t>(p)];
        node.parent = p == 0 ? -1 : (p - 1) / 2;
        for (int c = 2 * p + 1; c <= 2 * p + 2 && c < n; ++c) {
            node.children[node.child_count++] = c;
        }
    }

    // Iterative post-order over the heap layout.
    post_order_.reserve(num_agents);
    std::vector<std::pair<int, int>> stack;  // (node, next child slot)
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [p, slot] = stack.back();
        if (slot < nodes_[static_cast<std::size_t>(p)].child_count) {
            const int child = nodes_[static_cast<std::size_t>(p)].children[slot];
            ++slot;
            stack.emplace_back(child, 0);
        } else {
            post_order_.push_back(p);
            stack.pop_back();
        }
    }
}

std::size_t Tree::depth() const {
    std::size_t d = 0;
    for (std::size_t p = nodes_.size(); p > 0; p = (p - 1) / 2) ++d;
    return d;
}

Tree build_tree(std::size_t num_agents, Rng& rng) { return Tree(num_agents, rng); }

void EngineConfig::validate() const {
    if (iterations < 1) throw validation_error("iterations must be >= 1");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw validation_error("lambda must be in [0, 1]");
    if (plans_per_agent < 1) throw validation_error("plans_per_agent must be >= 1");
}

double global_cost(std::span<const double> aggregate, std::span<const double> target) {
    if (aggregate.size() != target.size()) {
        throw validation_error("global_cost: aggregate length " + std::to_string(aggregate.size()) +
                               " != target length " + std::to_string(target.size()));
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < aggregate.size(); ++i) {
        const double d = aggregate[i] - target[i];
        cost += d * d;
    }
    return cost;
}

namespace {

using DeltaVec = std::vector<std::pair<int, double>>;  // sorted by id, zero-free

// a + b, keeping ids sorted and dropping entries that cancel.
void merge_deltas(const DeltaVec& a, const DeltaVec& b, DeltaVec& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            const double v = a[i].second + b[j].second;
            if (v != 0.0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
}

double lookup(const DeltaVec& v, int id) {
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [](const std::pair<int, double>& e, int key) { return e.first < key; });
    return (it != v.end() && it->first == id) ? it->second : 0.0;
}

// new_ids - old_ids as a sparse +/-1 vector; both inputs sorted.
void selection_delta(const std::vector<int>& new_ids, const std::vector<int>& old_ids,
                     DeltaVec& out) {
    out.clear();
    std::size_t i = 0, j = 0;
    while (i < new_ids.size() || j < old_ids.size()) {
        if (j == old_ids.size() || (i < new_ids.size() && new_ids[i] < old_ids[j])) {
            out.emplace_back(new_ids[i++], 1.0);
        } else if (i == new_ids.size() || old_ids[j] < new_ids[i]) {
            out.emplace_back(old_ids[j++], -1.0);
        } else {
            ++i;
            ++j;
        }
    }
}

std::vector<double> aggregate_of(const std::vector<PlanSet>& plan_sets,
                                 const std::vector<int>& selection, std::size_t n_universe) {
    std::vector<double> agg(n_universe, 0.0);
    for (std::size_t a = 0; a < plan_sets.size(); ++a) {
        for (int id : plan_sets[a].plans[static_cast<std::size_t>(selection[a])].visit_sequence) {
            agg[static_cast<std::size_t>(id) - 1] += 1.0;
        }
    }
    return agg;
}

double total_local_cost_of(const std::vector<PlanSet>& plan_sets,
                           const std::vector<int>& selection) {
    double total = 0.0;
    for (std::size_t a = 0; a < plan_sets.size(); ++a) {
        total += plan_sets[a].local_costs[static_cast<std::size_t>(selection[a])];
    }
    return total;
}

std::size_t plans_per_agent_of(const std::vector<PlanSet>& plan_sets) {
    const std::size_t k = plan_sets.front().plans.size();
    for (const PlanSet& ps : plan_sets) {
        if (ps.plans.size() != k || ps.local_costs.size() != k || k == 0) {
            throw validation_error("all plan sets must carry the same nonzero plan count");
        }
    }
    return k;
}

}  // namespace

Selection epos_select(const std::vector<PlanSet>& plan_sets,
                      std::size_t n_universe,
                      std::span<const int> active_ids,
                      const EngineConfig& config,
                      const RoundObserver& observer) {
    config.validate();

    Selection result;
    result.response.aggregate.assign(n_universe, 0.0);
    if (plan_sets.empty()) {
        result.response.global_cost = static_cast<double>(active_ids.size());
        return result;
    }

    const std::size_t agents = plan_sets.size();
    const std::size_t k = plans_per_agent_of(plan_sets);

    // Sorted visit ids per plan, for sparse cost deltas and membership tests.
    std::vector<std::vector<std::vector<int>>> sorted_ids(agents);
    std::vector<std::vector<double>> norm_local(agents);
    for (std::size_t a = 0; a < agents; ++a) {
        sorted_ids[a].resize(k);
        for (std::size_t q = 0; q < k; ++q) {
            sorted_ids[a][q] = plan_sets[a].plans[q].visit_sequence;
            std::sort(sorted_ids[a][q].begin(), sorted_ids[a][q].end());
        }
        const auto& costs = plan_sets[a].local_costs;
        const auto [lo, hi] = std::minmax_element(costs.begin(), costs.end());
        norm_local[a].resize(k, 0.0);
        if (*hi > *lo) {
            for (std::size_t q = 0; q < k; ++q) norm_local[a][q] = (costs[q] - *lo) / (*hi - *lo);
        }
    }

    Rng tree_rng = Rng(config.seed).derive(0x7265652d706c6163ULL);
    const Tree tree(agents, tree_rng);

    // Every agent starts on its locally preferred plan, i.e. the selection
    // the uncoordinated baseline would make. Learning then only ever accepts
    // rounds that do not worsen the global cost, so the final response is
    // never worse than no coordination at all.
    std::vector<int> selected(agents);
    for (std::size_t a = 0; a < agents; ++a) {
        const auto& costs = plan_sets[a].local_costs;
        std::size_t best = 0;
        for (std::size_t q = 1; q < k; ++q) {
            if (costs[q] < costs[best]) best = q;
        }
        selected[a] = static_cast<int>(best);
    }
    std::vector<double> g = aggregate_of(plan_sets, selected, n_universe);
    double accepted_cost = 0.0;
    for (int id : active_ids) {
        const double d = g[static_cast<std::size_t>(id) - 1] - 1.0;
        accepted_cost += d * d;
    }

    std::vector<DeltaVec> node_delta(agents);
    DeltaVec merged, own_delta, scratch;
    std::vector<std::pair<std::size_t, int>> changed;  // (agent, previous index)

    for (int round = 1; round <= config.iterations; ++round) {
        changed.clear();

        for (int p : tree.post_order()) {
            const AgentNode& node = tree.nodes()[static_cast<std::size_t>(p)];
            const std::size_t a = static_cast<std::size_t>(node.agent_index);

            // Aggregate re-selections made below this node during this pass.
            if (node.child_count == 0) {
                merged.clear();
            } else if (node.child_count == 1) {
                merged = node_delta[static_cast<std::size_t>(node.children[0])];
            } else {
                merge_deltas(node_delta[static_cast<std::size_t>(node.children[0])],
                             node_delta[static_cast<std::size_t>(node.children[1])], merged);
            }

            const std::vector<int>& prev_ids = sorted_ids[a][static_cast<std::size_t>(selected[a])];

            int best_q = 0;
            double best_score = 0.0;
            double best_local = 0.0;
            for (std::size_t q = 0; q < k; ++q) {
                // Candidate system aggregate is base + plan, with
                // base = previous response - own previous plan + subtree changes.
                // Against the all-ones target, adding the plan shifts the
                // squared cost by sum over its ids of (2*base - 1).
                double delta_cost = 0.0;
                for (int id : sorted_ids[a][q]) {
                    double base = g[static_cast<std::size_t>(id) - 1] + lookup(merged, id);
                    if (std::binary_search(prev_ids.begin(), prev_ids.end(), id)) base -= 1.0;
                    delta_cost += 2.0 * base - 1.0;
                }
                const double score =
                    (1.0 - config.lambda) * delta_cost + config.lambda * norm_local[a][q];
                const double local = plan_sets[a].local_costs[q];
                if (q == 0 || score < best_score ||
                    (score == best_score && local < best_local)) {
                    best_q = static_cast<int>(q);
                    best_score = score;
                    best_local = local;
                }
            }

            if (best_q != selected[a]) {
                changed.emplace_back(a, selected[a]);
            }
            selection_delta(sorted_ids[a][static_cast<std::size_t>(best_q)], prev_ids, own_delta);
            selected[a] = best_q;
            merge_deltas(merged, own_delta, scratch);
            node_delta[static_cast<std::size_t>(p)].swap(scratch);
        }

        // Root decision: apply the round's net change only if it does not
        // worsen the accepted cost.
        const DeltaVec& root_delta = node_delta[static_cast<std::size_t>(tree.root())];
        double cost_change = 0.0;
        for (const auto& [id, v] : root_delta) {
            const double before = g[static_cast<std::size_t>(id) - 1] - 1.0;
            const double after = before + v;
            cost_change += after * after - before * before;
        }

        if (cost_change <= 0.0) {
            for (const auto& [id, v] : root_delta) g[static_cast<std::size_t>(id) - 1] += v;
            accepted_cost += cost_change;
        } else {
            for (auto it = changed.rbegin(); it != changed.rend(); ++it) {
                selected[it->first] = it->second;
            }
        }

        if (observer) {
            Selection snapshot;
            snapshot.plan_index = selected;
            snapshot.response.aggregate = g;
            snapshot.response.global_cost = accepted_cost;
            snapshot.response.total_local_cost = total_local_cost_of(plan_sets, selected);
            observer(round, snapshot);
        }
    }

    result.plan_index = std::move(selected);
    result.response.aggregate = std::move(g);
    result.response.global_cost = accepted_cost;
    result.response.total_local_cost = total_local_cost_of(plan_sets, result.plan_index);
    return result;
}

Selection uncoordinated_select(const std::vector<PlanSet>& plan_sets,
                               std::size_t n_universe,
                               std::span<const int> active_ids) {
    Selection result;
    result.plan_index.reserve(plan_sets.size());
    for (const PlanSet& ps : plan_sets) {
        if (ps.local_costs.empty()) {
            throw validation_error("plan set without plans");
        }
        std::size_t best = 0;
        for (std::size_t q = 1; q < ps.local_costs.size(); ++q) {
            if (ps.local_costs[q] < ps.local_costs[best]) best = q;
        }
        result.plan_index.push_back(static_cast<int>(best));
    }

    result.response.aggregate = aggregate_of(plan_sets, result.plan_index, n_universe);
    result.response.total_local_cost = total_local_cost_of(plan_sets, result.plan_index);
    double cost = 0.0;
    for (int id : active_ids) {
        const double d = result.response.aggregate[static_cast<std::size_t>(id) - 1] - 1.0;
        cost += d * d;
    }
    result.response.global_cost = cost;
    return result;
}

}  // namespace droneplan
