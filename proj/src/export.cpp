#include "droneplan/export.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "droneplan/route.hpp"
#include "droneplan/version.hpp"

namespace droneplan {

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw io_error("failed to write " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string routes_to_geojson(const MissionResult& result, const Instance& inst,
                              const DistanceMatrix& dmat, double service_time_s) {
    nlohmann::ordered_json features = nlohmann::ordered_json::array();
    for (const Route& route : result.final_routes) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        coords.push_back({inst.depot.lon_deg, inst.depot.lat_deg});
        for (int id : route.visit_sequence) {
            const GeoPoint& p = inst.customer(id).location;
            coords.push_back({p.lon_deg, p.lat_deg});
        }
        coords.push_back({inst.depot.lon_deg, inst.depot.lat_deg});

        const RouteScore score = score_route(route.visit_sequence, inst, dmat, service_time_s);
        nlohmann::ordered_json deliveries = nlohmann::ordered_json::array();
        for (const DeliveryRecord& rec : score.deliveries) {
            deliveries.push_back({{"customer", rec.customer_id},
                                  {"arrival_s", rec.arrival_s},
                                  {"discount", rec.discount}});
        }

        nlohmann::ordered_json feature;
        feature["type"] = "Feature";
        feature["geometry"] = {{"type", "LineString"}, {"coordinates", std::move(coords)}};
        feature["properties"] = {{"uav", route.uav_index},
                                 {"distance_m", route.total_distance_m},
                                 {"energy_joule", route.total_energy_joule},
                                 {"savings", route.savings},
                                 {"deliveries", std::move(deliveries)}};
        features.push_back(std::move(feature));
    }

    nlohmann::ordered_json doc;
    doc["type"] = "FeatureCollection";
    doc["features"] = std::move(features);
    return doc.dump(2) + "\n";
}

void export_routes(const MissionResult& result, const Instance& inst, const DistanceMatrix& dmat,
                   const std::string& path, double service_time_s) {
    write_text_file(path, routes_to_geojson(result, inst, dmat, service_time_s));
}

std::string metrics_to_csv(const MissionResult& result) {
    std::string csv = "uav,stops,customers,distance_m,energy_joule,savings\n";
    for (const Route& route : result.final_routes) {
        csv += std::to_string(route.uav_index);
        csv += ',';
        csv += std::to_string(route.visit_sequence.size());
        csv += ',';
        for (std::size_t i = 0; i < route.visit_sequence.size(); ++i) {
            if (i > 0) csv += '|';
            csv += std::to_string(route.visit_sequence[i]);
        }
        csv += ',';
        csv += fmt_double(route.total_distance_m);
        csv += ',';
        csv += fmt_double(route.total_energy_joule);
        csv += ',';
        csv += fmt_double(route.savings);
        csv += '\n';
    }
    return csv;
}

std::string summary_to_json(const MissionResult& result, const Instance& inst,
                            const MissionConfig& config) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["n"] = inst.customer_count();
    doc["mode"] = to_string(config.mode);
    doc["seed"] = config.seed;
    doc["plans_per_agent"] = config.engine.plans_per_agent;
    doc["iterations"] = config.engine.iterations;
    doc["lambda"] = config.engine.lambda;
    doc["uav_count"] = result.uav_count;
    doc["total_distance_m"] = result.total_distance_m;
    doc["total_savings"] = result.total_savings;
    doc["rounds_used"] = result.rounds_used;
    doc["per_round_coverage"] = result.per_round_coverage;
    doc["coverage"] =
        result.per_round_coverage.empty() ? 1.0 : result.per_round_coverage.back();
    if (!result.round_stats.empty()) {
        doc["first_pass_global_cost"] = result.round_stats.front().engine_global_cost;
    }
    return doc.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& manifest) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = manifest.tool_version;
    doc["command"] = manifest.command;
    doc["created_at"] = manifest.created_at;
    doc["config"] = manifest.config;
    doc["instance_path"] = manifest.instance_path;
    doc["instance_hash"] = manifest.instance_hash;
    doc["seed"] = manifest.seed;
    doc["timings_s"] = manifest.timings_s;
    return doc.dump(2) + "\n";
}

}  // namespace droneplan
