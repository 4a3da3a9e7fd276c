#include "droneplan/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "droneplan/bench.hpp"
#include "droneplan/export.hpp"
#include "droneplan/instance.hpp"
#include "droneplan/mission.hpp"
#include "droneplan/version.hpp"

namespace droneplan {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string now_string() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string hash_file(const std::string& path) { return hex64(fnv1a64(read_text_file(path))); }

struct GenArgs {
    std::size_t n = 10;
    double depot_lat = 51.4700;
    double depot_lon = -0.4543;
    double radius_km = 10.0;
    std::vector<double> weights = {0.5, 1.0, 1.5, 2.0};
    std::uint64_t seed = 1;
    std::string out;
};

struct SolveArgs {
    std::string instance;
    std::string mode = "coordinated";
    int plans = 10;
    int iterations = 50;
    double lambda = 0.0;
    int max_rounds = 50;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
};

struct CompareArgs {
    std::string instance;
    std::vector<std::size_t> n_grid;
    int reps = 25;
    int plans = 10;
    int iterations = 50;
    double lambda = 0.0;
    std::uint64_t seed = 1;
    std::string out = ".";
};

struct BenchArgs {
    std::size_t n_max = 10'000;
    std::vector<int> plans_list = {10, 100};
    int iterations = 50;
    double time_budget = 600.0;
    int workers = 1;
    std::uint64_t seed = 1;
    std::string out = "bench.csv";
};

int run_gen(const GenArgs& args) {
    const Instance inst =
        generate_instance(args.n, GeoPoint{args.depot_lat, args.depot_lon},
                          args.radius_km * 1000.0, args.weights, UavSpec{}, Environment{},
                          EconomicParams{}, args.seed);
    save_instance(inst, args.out);
    std::cout << "instance " << args.out << " n=" << args.n
              << " fnv1a64=" << hash_file(args.out) << "\n";
    return kExitOk;
}

MissionConfig solve_config(const SolveArgs& args) {
    MissionConfig config;
    config.mode = mode_from_string(args.mode);
    config.engine.plans_per_agent = args.plans;
    config.engine.iterations = args.iterations;
    config.engine.lambda = args.lambda;
    config.max_rounds = args.max_rounds;
    config.seed = args.seed;
    return config;
}

void write_solve_outputs(const fs::path& dir, const MissionResult& result, const Instance& inst,
                         const DistanceMatrix& dmat, const MissionConfig& config,
                         const SolveArgs& args, double wall_s) {
    fs::create_directories(dir);
    export_routes(result, inst, dmat, (dir / "routes.geojson").string());
    write_text_file((dir / "metrics.csv").string(), metrics_to_csv(result));
    write_text_file((dir / "summary.json").string(), summary_to_json(result, inst, config));

    RunManifest manifest;
    manifest.tool_version = kToolVersion;
    manifest.command = "solve";
    manifest.created_at = now_string();
    manifest.config = {{"mode", args.mode},
                       {"plans", std::to_string(args.plans)},
                       {"iterations", std::to_string(args.iterations)},
                       {"lambda", fmt_double(args.lambda)},
                       {"max_rounds", std::to_string(args.max_rounds)}};
    manifest.instance_path = args.instance;
    manifest.instance_hash = hash_file(args.instance);
    manifest.seed = args.seed;
    manifest.timings_s = {{"plan_gen", result.plan_gen_time_s},
                          {"select", result.select_time_s},
                          {"mission", result.wall_time_s},
                          {"total", wall_s}};
    write_text_file((dir / "manifest.json").string(), manifest_to_json(manifest));
}

int run_solve(const SolveArgs& args) {
    const auto start = Clock::now();
    const Instance inst = load_instance(args.instance);
    const DistanceMatrix dmat = build_distance_matrix(inst);
    const MissionConfig config = solve_config(args);

    auto finish = [&](const MissionResult& result, bool complete) {
        const double wall_s = std::chrono::duration<double>(Clock::now() - start).count();
        write_solve_outputs(args.out_dir, result, inst, dmat, config, args, wall_s);
        std::cout << (complete ? "solved " : "PARTIAL ") << args.instance << " mode=" << args.mode
                  << " uavs=" << result.uav_count << " distance_km="
                  << fmt_double(result.total_distance_m / 1000.0)
                  << " savings=" << fmt_double(result.total_savings)
                  << " rounds=" << result.rounds_used << "\n";
    };

    try {
        const MissionResult result = run_mission(inst, dmat, config);
        finish(result, true);
        return kExitOk;
    } catch (const partial_coverage_error& e) {
        finish(e.partial, false);
        std::cerr << "partial coverage: " << e.what() << "\n";
        return kExitPartialCoverage;
    }
}

nlohmann::ordered_json report_json(std::size_t n, const ComparisonReport& report) {
    auto mode_json = [](const std::vector<MissionSummary>& runs) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const MissionSummary& r : runs) {
            arr.push_back({{"seed", r.seed},
                           {"completed", r.completed},
                           {"distance_m", r.total_distance_m},
                           {"savings", r.total_savings},
                           {"uav_count", r.uav_count},
                           {"rounds", r.rounds_used},
                           {"first_pass_coverage", r.first_pass_coverage}});
        }
        return arr;
    };
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["repetitions"] = report.repetitions;
    doc["coordinated"] = mode_json(report.coordinated);
    doc["uncoordinated"] = mode_json(report.uncoordinated);
    doc["savings_diff"] = report.savings_diff;
    doc["uav_diff"] = report.uav_diff;
    return doc;
}

void append_report_csv(std::string& csv, std::size_t n, const ComparisonReport& report) {
    auto row = [&](const char* mode, const std::vector<MissionSummary>& runs,
                   const SeriesStats& dist, const SeriesStats& savings, const SeriesStats& uavs,
                   const SeriesStats& rounds, const SeriesStats& cover) {
        int failures = 0;
        for (const MissionSummary& r : runs) failures += r.completed ? 0 : 1;
        csv += std::to_string(n);
        csv += ',';
        csv += mode;
        csv += ',' + std::to_string(runs.size());
        csv += ',' + fmt_double(dist.mean) + ',' + fmt_double(dist.stddev);
        csv += ',' + fmt_double(savings.mean) + ',' + fmt_double(savings.stddev);
        csv += ',' + fmt_double(uavs.mean) + ',' + fmt_double(uavs.stddev);
        csv += ',' + fmt_double(rounds.mean) + ',' + fmt_double(rounds.stddev);
        csv += ',' + fmt_double(cover.mean) + ',' + fmt_double(cover.stddev);
        csv += ',' + std::to_string(failures) + '\n';
    };
    row("coordinated", report.coordinated, report.coordinated_distance,
        report.coordinated_savings, report.coordinated_uavs, report.coordinated_rounds,
        report.coordinated_first_pass);
    row("uncoordinated", report.uncoordinated, report.uncoordinated_distance,
        report.uncoordinated_savings, report.uncoordinated_uavs, report.uncoordinated_rounds,
        report.uncoordinated_first_pass);
}

int run_compare(const CompareArgs& args) {
    const auto start = Clock::now();
    MissionConfig config;
    config.engine.plans_per_agent = args.plans;
    config.engine.iterations = args.iterations;
    config.engine.lambda = args.lambda;
    config.seed = args.seed;

    struct Case {
        std::size_t n;
        Instance inst;
    };
    std::vector<Case> cases;
    if (!args.instance.empty()) {
        Instance inst = load_instance(args.instance);
        const std::size_t n = inst.customer_count();
        cases.push_back({n, std::move(inst)});
    } else {
        for (std::size_t n : args.n_grid) {
            cases.push_back({n, generate_instance(n, GeoPoint{51.4700, -0.4543}, 10'000.0,
                                                  {0.5, 1.0, 1.5, 2.0}, UavSpec{}, Environment{},
                                                  EconomicParams{}, mix64(args.seed ^ mix64(n)))});
        }
    }

    std::string csv =
        "n,mode,reps,distance_mean,distance_std,savings_mean,savings_std,uav_mean,uav_std,"
        "rounds_mean,rounds_std,first_pass_coverage_mean,first_pass_coverage_std,failures\n";
    nlohmann::ordered_json series = nlohmann::ordered_json::array();

    for (const Case& c : cases) {
        const DistanceMatrix dmat = build_distance_matrix(c.inst);
        const ComparisonReport report = compare_modes(c.inst, dmat, config, args.reps);
        append_report_csv(csv, c.n, report);
        series.push_back(report_json(c.n, report));
        std::cout << "n=" << c.n << " savings_diff_mean=" << fmt_double(report.savings_diff_stats.mean)
                  << " uav_diff_mean=" << fmt_double(report.uav_diff_stats.mean) << "\n";
    }

    fs::create_directories(args.out);
    write_text_file((fs::path(args.out) / "compare.csv").string(), csv);
    write_text_file((fs::path(args.out) / "compare.json").string(), series.dump(2) + "\n");

    RunManifest manifest;
    manifest.tool_version = kToolVersion;
    manifest.command = "compare";
    manifest.created_at = now_string();
    manifest.config = {{"reps", std::to_string(args.reps)},
                       {"plans", std::to_string(args.plans)},
                       {"iterations", std::to_string(args.iterations)},
                       {"lambda", fmt_double(args.lambda)}};
    if (!args.instance.empty()) {
        manifest.instance_path = args.instance;
        manifest.instance_hash = hash_file(args.instance);
    } else {
        std::string grid;
        for (std::size_t n : args.n_grid) grid += (grid.empty() ? "" : ",") + std::to_string(n);
        manifest.config["n_grid"] = grid;
    }
    manifest.seed = args.seed;
    manifest.timings_s = {{"total", std::chrono::duration<double>(Clock::now() - start).count()}};
    write_text_file((fs::path(args.out) / "manifest.json").string(), manifest_to_json(manifest));
    return kExitOk;
}

int run_bench_cmd(const BenchArgs& args) {
    BenchOptions options;
    options.n_max = args.n_max;
    options.plans_list = args.plans_list;
    options.iterations = args.iterations;
    options.time_budget_s = args.time_budget;
    options.workers = args.workers;
    options.seed = args.seed;

    const BenchReport report = run_bench(options);
    const std::string csv = bench_to_csv(report);
    write_text_file(args.out, csv);
    std::cout << csv;
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Depot-based multi-package drone delivery planning with collective learning"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random delivery instance");
    gen_cmd->add_option("--n", gen.n, "Number of customers");
    gen_cmd->add_option("--depot-lat", gen.depot_lat, "Depot latitude, degrees");
    gen_cmd->add_option("--depot-lon", gen.depot_lon, "Depot longitude, degrees");
    gen_cmd->add_option("--radius-km", gen.radius_km, "Customer placement radius, km");
    gen_cmd->add_option("--weights", gen.weights, "Package weight choices, kg")->delimiter(',');
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->envname("DRONEPLAN_SEED");
    gen_cmd->add_option("--out", gen.out, "Output instance file")->required();

    SolveArgs solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Plan one full delivery mission");
    solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
    solve_cmd->add_option("--mode", solve.mode, "coordinated|uncoordinated");
    solve_cmd->add_option("--plans", solve.plans, "Plans per agent");
    solve_cmd->add_option("--iterations", solve.iterations, "Learning iterations");
    solve_cmd->add_option("--lambda", solve.lambda, "Local-cost blend in [0,1]");
    solve_cmd->add_option("--max-rounds", solve.max_rounds, "Safety bound on repeat rounds");
    solve_cmd->add_option("--seed", solve.seed, "RNG seed")->envname("DRONEPLAN_SEED");
    solve_cmd->add_option("--out-dir", solve.out_dir, "Output directory");

    CompareArgs compare;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Paired coordinated vs uncoordinated statistics");
    auto* inst_opt = compare_cmd->add_option("--instance", compare.instance, "Instance file");
    auto* grid_opt =
        compare_cmd->add_option("--n-grid", compare.n_grid, "Customer counts")->delimiter(',');
    inst_opt->excludes(grid_opt);
    compare_cmd->add_option("--reps", compare.reps, "Repetitions per case");
    compare_cmd->add_option("--plans", compare.plans, "Plans per agent");
    compare_cmd->add_option("--iterations", compare.iterations, "Learning iterations");
    compare_cmd->add_option("--lambda", compare.lambda, "Local-cost blend in [0,1]");
    compare_cmd->add_option("--seed", compare.seed, "RNG seed")->envname("DRONEPLAN_SEED");
    compare_cmd->add_option("--out", compare.out, "Output directory");

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Scaling benchmark sweep");
    bench_cmd->add_option("--n-max", bench.n_max, "Largest customer count");
    bench_cmd->add_option("--plans-list", bench.plans_list, "Plan counts")->delimiter(',');
    bench_cmd->add_option("--iterations", bench.iterations, "Learning iterations");
    bench_cmd->add_option("--time-budget", bench.time_budget, "Per-cell budget, seconds");
    bench_cmd->add_option("--workers", bench.workers, "Parallel cells");
    bench_cmd->add_option("--seed", bench.seed, "RNG seed")->envname("DRONEPLAN_SEED");
    bench_cmd->add_option("--out", bench.out, "Output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (solve_cmd->parsed()) return run_solve(solve);
        if (compare_cmd->parsed()) {
            if (compare.instance.empty() && compare.n_grid.empty()) {
                std::cerr << "compare needs --instance or --n-grid\n";
                return kExitUsage;
            }
            return run_compare(compare);
        }
        if (bench_cmd->parsed()) return run_bench_cmd(bench);
        return kExitUsage;
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible instance: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const partial_coverage_error& e) {
        std::cerr << "partial coverage: " << e.what() << "\n";
        return kExitPartialCoverage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace droneplan
