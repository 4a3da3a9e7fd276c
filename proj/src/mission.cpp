#include "droneplan/mission.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

namespace droneplan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

const char* to_string(Mode mode) {
    return mode == Mode::coordinated ? "coordinated" : "uncoordinated";
}

Mode mode_from_string(const std::string& s) {
    if (s == "coordinated") return Mode::coordinated;
    if (s == "uncoordinated") return Mode::uncoordinated;
    throw validation_error("unknown mode \"" + s + "\" (expected coordinated|uncoordinated)");
}

void MissionConfig::validate() const {
    engine.validate();
    if (max_rounds < 1) throw validation_error("max_rounds must be >= 1");
    if (service_time_s < 0.0) throw validation_error("service_time_s must be >= 0");
    if (time_budget_s < 0.0) throw validation_error("time_budget_s must be >= 0");
}

Resolution resolve_selection(const Selection& selection,
                             const std::vector<PlanSet>& plan_sets,
                             std::span<const int> active,
                             const Instance& inst,
                             const DistanceMatrix& dmat,
                             double service_time_s) {
    Resolution res;
    std::vector<char> claimed(inst.customer_count() + 1, 0);

    std::vector<int> kept;
    for (std::size_t a = 0; a < plan_sets.size(); ++a) {
        const Route& route = plan_sets[a].plans[static_cast<std::size_t>(selection.plan_index[a])];
        kept.clear();
        for (int id : route.visit_sequence) {
            if (!claimed[static_cast<std::size_t>(id)]) {
                claimed[static_cast<std::size_t>(id)] = 1;
                kept.push_back(id);
            }
        }
        if (kept.empty()) continue;

        if (kept.size() == route.visit_sequence.size()) {
            res.routes.push_back(route);
        } else {
            Route spliced = make_route(route.uav_index, kept, inst, dmat, service_time_s);
            if (spliced.total_energy_joule >
                inst.uav.battery_capacity_joule * (1.0 + 1e-9)) {
                throw validation_error("spliced route exceeds battery, route for agent " +
                                       std::to_string(a));
            }
            res.routes.push_back(std::move(spliced));
        }
        res.served.insert(res.served.end(), kept.begin(), kept.end());
    }

    for (int id : active) {
        if (!claimed[static_cast<std::size_t>(id)]) res.unserved.push_back(id);
    }
    return res;
}

MissionResult run_mission(const Instance& inst, const DistanceMatrix& dmat,
                          const MissionConfig& config) {
    config.validate();
    const auto start = Clock::now();
    const std::size_t n = inst.customer_count();

    MissionResult result;
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 1);

    auto snapshot_partial = [&]() {
        result.rounds_used = static_cast<int>(result.round_stats.size());
        result.wall_time_s = seconds_since(start);
        return result;
    };

    int round = 0;
    while (!active.empty()) {
        if (round >= config.max_rounds) {
            throw partial_coverage_error(
                "mission exhausted max_rounds=" + std::to_string(config.max_rounds) + " with " +
                    std::to_string(active.size()) + " customers unserved",
                snapshot_partial());
        }
        if (config.time_budget_s > 0.0 && seconds_since(start) > config.time_budget_s) {
            throw timeout_error("mission exceeded time budget of " +
                                    std::to_string(config.time_budget_s) + " s",
                                snapshot_partial());
        }
        ++round;

        const std::uint64_t round_seed = mix64(config.seed ^ mix64(static_cast<std::uint64_t>(round)));

        auto t0 = Clock::now();
        const std::vector<PlanSet> plan_sets =
            generate_plan_sets(inst, dmat, config.engine.plans_per_agent, active, round_seed);
        result.plan_gen_time_s += seconds_since(t0);

        t0 = Clock::now();
        EngineConfig engine_cfg = config.engine;
        engine_cfg.seed = round_seed ^ 0x74726565ULL;
        const Selection selection =
            config.mode == Mode::coordinated
                ? epos_select(plan_sets, n, active, engine_cfg)
                : uncoordinated_select(plan_sets, n, active);
        result.select_time_s += seconds_since(t0);

        Resolution res =
            resolve_selection(selection, plan_sets, active, inst, dmat, config.service_time_s);

        if (res.served.empty()) {
            throw partial_coverage_error(
                "selection round " + std::to_string(round) + " served no new customer (" +
                    std::to_string(active.size()) + " remaining)",
                snapshot_partial());
        }

        for (Route& route : res.routes) {
            route.uav_index = ++result.uav_count;  // fresh UAV per accepted route
            for (std::size_t pos = 0; pos < route.visit_sequence.size(); ++pos) {
                result.assignments[route.visit_sequence[pos]] = {route.uav_index,
                                                                 static_cast<int>(pos)};
            }
            result.total_distance_m += route.total_distance_m;
            result.total_savings += route.savings;
            result.final_routes.push_back(std::move(route));
        }

        std::vector<char> served_now(n + 1, 0);
        for (int id : res.served) served_now[static_cast<std::size_t>(id)] = 1;
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](int id) { return served_now[static_cast<std::size_t>(id)]; }),
                     active.end());

        RoundStats stats;
        stats.round = round;
        stats.engine_global_cost = selection.response.global_cost;
        stats.routes_accepted = static_cast<int>(res.routes.size());
        stats.newly_served = static_cast<int>(res.served.size());
        stats.coverage_after =
            n == 0 ? 1.0 : static_cast<double>(n - active.size()) / static_cast<double>(n);
        result.round_stats.push_back(stats);
        result.per_round_coverage.push_back(stats.coverage_after);
    }

    result.rounds_used = static_cast<int>(result.round_stats.size());
    result.wall_time_s = seconds_since(start);
    return result;
}

MissionResult run_mission(const Instance& inst, const MissionConfig& config) {
    const DistanceMatrix dmat = build_distance_matrix(inst);
    return run_mission(inst, dmat, config);
}

SeriesStats SeriesStats::of(std::span<const double> values) {
    SeriesStats s;
    if (values.empty()) return s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

MissionSummary summarize(const MissionResult& result, std::uint64_t seed, bool completed) {
    MissionSummary s;
    s.seed = seed;
    s.completed = completed;
    s.total_distance_m = result.total_distance_m;
    s.total_savings = result.total_savings;
    s.uav_count = result.uav_count;
    s.rounds_used = result.rounds_used;
    if (!result.round_stats.empty()) {
        s.first_pass_coverage = result.round_stats.front().coverage_after;
        s.first_pass_global_cost = result.round_stats.front().engine_global_cost;
    }
    s.wall_time_s = result.wall_time_s;
    return s;
}

ComparisonReport compare_modes(const Instance& inst, const DistanceMatrix& dmat,
                               const MissionConfig& config, int repetitions) {
    if (repetitions < 1) throw validation_error("repetitions must be >= 1");

    ComparisonReport report;
    report.repetitions = repetitions;

    auto run_one = [&](Mode mode, std::uint64_t seed) {
        MissionConfig cfg = config;
        cfg.mode = mode;
        cfg.seed = seed;
        try {
            return summarize(run_mission(inst, dmat, cfg), seed, true);
        } catch (const partial_coverage_error& e) {
            return summarize(e.partial, seed, false);
        }
    };

    for (int rep = 0; rep < repetitions; ++rep) {
        const std::uint64_t seed = mix64(config.seed ^ mix64(static_cast<std::uint64_t>(rep)));
        report.coordinated.push_back(run_one(Mode::coordinated, seed));
        report.uncoordinated.push_back(run_one(Mode::uncoordinated, seed));
        report.savings_diff.push_back(report.coordinated.back().total_savings -
                                      report.uncoordinated.back().total_savings);
        report.uav_diff.push_back(static_cast<double>(report.uncoordinated.back().uav_count) -
                                  static_cast<double>(report.coordinated.back().uav_count));
    }

    auto collect = [&](const std::vector<MissionSummary>& runs, auto getter) {
        std::vector<double> values;
        values.reserve(runs.size());
        for (const MissionSummary& r : runs) values.push_back(getter(r));
        return SeriesStats::of(values);
    };
    auto distance = [](const MissionSummary& r) { return r.total_distance_m; };
    auto savings = [](const MissionSummary& r) { return r.total_savings; };
    auto uavs = [](const MissionSummary& r) { return static_cast<double>(r.uav_count); };
    auto rounds = [](const MissionSummary& r) { return static_cast<double>(r.rounds_used); };
    auto first_pass = [](const MissionSummary& r) { return r.first_pass_coverage; };

    report.coordinated_distance = collect(report.coordinated, distance);
    report.uncoordinated_distance = collect(report.uncoordinated, distance);
    report.coordinated_savings = collect(report.coordinated, savings);
    report.uncoordinated_savings = collect(report.uncoordinated, savings);
    report.coordinated_uavs = collect(report.coordinated, uavs);
    report.uncoordinated_uavs = collect(report.uncoordinated, uavs);
    report.coordinated_rounds = collect(report.coordinated, rounds);
    report.uncoordinated_rounds = collect(report.uncoordinated, rounds);
    report.coordinated_first_pass = collect(report.coordinated, first_pass);
    report.uncoordinated_first_pass = collect(report.uncoordinated, first_pass);
    report.savings_diff_stats = SeriesStats::of(report.savings_diff);
    report.uav_diff_stats = SeriesStats::of(report.uav_diff);
    return report;
}

}  // namespace droneplan
