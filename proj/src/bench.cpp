#include "droneplan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "droneplan/export.hpp"
#include "droneplan/rng.hpp"

namespace droneplan {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::size_t> n_ladder(std::size_t n_max) {
    std::vector<std::size_t> ns;
    for (std::size_t n = 10; n <= n_max; n *= 10) ns.push_back(n);
    if (ns.empty() || ns.back() != n_max) ns.push_back(n_max);
    return ns;
}

BenchCell run_cell(const BenchOptions& options, std::size_t n, int plans) {
    BenchCell cell;
    cell.n = n;
    cell.plans = plans;
    cell.iterations = options.iterations;

    const auto start = Clock::now();
    const Instance inst =
        generate_instance(n, options.depot, options.radius_m, options.weight_choices, UavSpec{},
                          Environment{}, EconomicParams{},
                          mix64(options.seed ^ mix64(static_cast<std::uint64_t>(n))));

    const auto t_matrix = Clock::now();
    const DistanceMatrix dmat = build_distance_matrix(inst);
    cell.matrix_time_s = std::chrono::duration<double>(Clock::now() - t_matrix).count();

    MissionConfig config;
    config.mode = Mode::coordinated;
    config.engine.plans_per_agent = plans;
    config.engine.iterations = options.iterations;
    config.seed = mix64(options.seed ^ mix64(n) ^ static_cast<std::uint64_t>(plans));
    config.time_budget_s = options.time_budget_s;

    auto fill = [&](const MissionResult& result) {
        cell.plan_gen_time_s = result.plan_gen_time_s;
        cell.select_time_s = result.select_time_s;
        cell.uav_count = result.uav_count;
        cell.coverage = result.per_round_coverage.empty() ? 0.0 : result.per_round_coverage.back();
        if (!result.round_stats.empty()) {
            cell.final_global_cost = result.round_stats.front().engine_global_cost;
        }
    };

    try {
        fill(run_mission(inst, dmat, config));
    } catch (const timeout_error& e) {
        fill(e.partial);
        cell.over_budget = true;
    }
    cell.total_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    return cell;
}

}  // namespace

BenchReport run_bench(const BenchOptions& options) {
    std::vector<std::pair<std::size_t, int>> cells;
    for (std::size_t n : n_ladder(options.n_max)) {
        for (int plans : options.plans_list) cells.emplace_back(n, plans);
    }

    BenchReport report;
    report.rows.resize(cells.size());

    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            report.rows[i] = run_cell(options, cells[i].first, cells[i].second);
        }
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < cells.size();
                     i += static_cast<std::size_t>(workers)) {
                    report.rows[i] = run_cell(options, cells[i].first, cells[i].second);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const BenchCell& a, const BenchCell& b) {
        return a.n != b.n ? a.n < b.n : a.plans < b.plans;
    });
    return report;
}

std::string bench_to_csv(const BenchReport& report) {
    std::string csv =
        "n,plans,iterations,matrix_s,plan_gen_s,select_s,total_s,final_global_cost,coverage,"
        "uav_count,over_budget\n";
    for (const BenchCell& c : report.rows) {
        csv += std::to_string(c.n) + ',' + std::to_string(c.plans) + ',' +
               std::to_string(c.iterations) + ',' + fmt_double(c.matrix_time_s) + ',' +
               fmt_double(c.plan_gen_time_s) + ',' + fmt_double(c.select_time_s) + ',' +
               fmt_double(c.total_time_s) + ',' + fmt_double(c.final_global_cost) + ',' +
               fmt_double(c.coverage) + ',' + std::to_string(c.uav_count) + ',' +
               (c.over_budget ? "1" : "0") + '\n';
    }
    return csv;
}

}  // namespace droneplan
