#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "droneplan/instance.hpp"
#include "droneplan/mission.hpp"

namespace droneplan {

struct BenchOptions {
    std::size_t n_max = 10'000;
    std::vector<int> plans_list = {10, 100};
    int iterations = 50;
    double time_budget_s = 600.0;  // per cell
    std::uint64_t seed = 1;
    GeoPoint depot{51.4700, -0.4543};
    double radius_m = 10'000.0;
    std::vector<double> weight_choices = {0.5, 1.0, 1.5, 2.0};
    int workers = 1;
};

struct BenchCell {
    std::size_t n = 0;
    int plans = 0;
    int iterations = 0;
    double matrix_time_s = 0.0;
    double plan_gen_time_s = 0.0;
    double select_time_s = 0.0;
    double total_time_s = 0.0;
    double final_global_cost = 0.0;  // first-pass engine cost
    double coverage = 0.0;
    int uav_count = 0;
    bool over_budget = false;
};

struct BenchReport {
    std::vector<BenchCell> rows;  // sorted by n, then plan count
};

// Full coordinated missions over an n ladder (powers of ten up to n_max) and
// each plan count. Cells that blow the per-cell time budget are recorded as
// over_budget with whatever they achieved.
BenchReport run_bench(const BenchOptions& options);

std::string bench_to_csv(const BenchReport& report);

}  // namespace droneplan
