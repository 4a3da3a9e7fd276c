#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "droneplan/collective.hpp"
#include "droneplan/instance.hpp"
#include "droneplan/plan_gen.hpp"

namespace droneplan {

enum class Mode { coordinated, uncoordinated };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& s);

struct MissionConfig {
    Mode mode = Mode::coordinated;
    EngineConfig engine;
    int max_rounds = 50;
    std::uint64_t seed = 1;
    double service_time_s = 0.0;  // hover time per delivery stop
    double time_budget_s = 0.0;   // 0 = unlimited; bench cells set this

    void validate() const;
};

struct RoundStats {
    int round = 0;
    double engine_global_cost = 0.0;
    int routes_accepted = 0;
    int newly_served = 0;
    double coverage_after = 0.0;  // cumulative fraction of all customers
};

struct MissionResult {
    std::map<int, std::pair<int, int>> assignments;  // customer -> (uav id, 0-based position)
    std::vector<Route> final_routes;                 // uav_index holds the 1-based uav id
    int uav_count = 0;
    double total_distance_m = 0.0;
    double total_savings = 0.0;
    int rounds_used = 0;
    std::vector<double> per_round_coverage;
    std::vector<RoundStats> round_stats;
    double wall_time_s = 0.0;
    double plan_gen_time_s = 0.0;
    double select_time_s = 0.0;
};

// Mission could not serve every customer; carries what was achieved.
class partial_coverage_error : public error {
  public:
    partial_coverage_error(const std::string& what, MissionResult partial)
        : error(what), partial(std::move(partial)) {}

    MissionResult partial;
};

// Mission exceeded its configured time budget.
class timeout_error : public error {
  public:
    timeout_error(const std::string& what, MissionResult partial)
        : error(what), partial(std::move(partial)) {}

    MissionResult partial;
};

struct Resolution {
    std::vector<Route> routes;  // accepted, spliced, re-scored, launch order
    std::vector<int> served;
    std::vector<int> unserved;
};

// Turns a selection into disjoint routes: a customer claimed by several
// selected routes stays where it appears earliest (agent index, then
// position); spliced routes are re-scored from scratch.
Resolution resolve_selection(const Selection& selection,
                             const std::vector<PlanSet>& plan_sets,
                             std::span<const int> active,
                             const Instance& inst,
                             const DistanceMatrix& dmat,
                             double service_time_s = 0.0);

// Repeats plan generation + selection over the still-unserved customers until
// everyone is covered, launching fresh UAVs each round.
MissionResult run_mission(const Instance& inst, const DistanceMatrix& dmat,
                          const MissionConfig& config);
MissionResult run_mission(const Instance& inst, const MissionConfig& config);

struct SeriesStats {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation

    static SeriesStats of(std::span<const double> values);
};

struct MissionSummary {
    std::uint64_t seed = 0;
    bool completed = false;
    double total_distance_m = 0.0;
    double total_savings = 0.0;
    int uav_count = 0;
    int rounds_used = 0;
    double first_pass_coverage = 0.0;
    double first_pass_global_cost = 0.0;
    double wall_time_s = 0.0;
};

struct ComparisonReport {
    int repetitions = 0;
    std::vector<MissionSummary> coordinated;
    std::vector<MissionSummary> uncoordinated;
    std::vector<double> savings_diff;  // coordinated - uncoordinated, per seed
    std::vector<double> uav_diff;      // uncoordinated - coordinated, per seed

    SeriesStats coordinated_distance, uncoordinated_distance;
    SeriesStats coordinated_savings, uncoordinated_savings;
    SeriesStats coordinated_uavs, uncoordinated_uavs;
    SeriesStats coordinated_rounds, uncoordinated_rounds;
    SeriesStats coordinated_first_pass, uncoordinated_first_pass;
    SeriesStats savings_diff_stats, uav_diff_stats;
};

MissionSummary summarize(const MissionResult& result, std::uint64_t seed, bool completed);

// Paired runs of both modes over `repetitions` derived seeds. Per-run
// failures (partial coverage) are recorded in the summaries, not rethrown.
ComparisonReport compare_modes(const Instance& inst, const DistanceMatrix& dmat,
                               const MissionConfig& config, int repetitions);

}  // namespace droneplan
