#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "droneplan/mission.hpp"

namespace droneplan {

// Shortest round-trip decimal form of v (std::to_chars), deterministic bytes.
std::string fmt_double(double v);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// GeoJSON FeatureCollection: one LineString per UAV route, closed at the
// depot, longitude first. Properties carry the uav id, distance, savings and
// the per-customer delivery time and discount tier.
std::string routes_to_geojson(const MissionResult& result, const Instance& inst,
                              const DistanceMatrix& dmat, double service_time_s = 0.0);
void export_routes(const MissionResult& result, const Instance& inst, const DistanceMatrix& dmat,
                   const std::string& path, double service_time_s = 0.0);

// Flat per-route table, one row per UAV.
std::string metrics_to_csv(const MissionResult& result);

// Machine-readable run summary. Deterministic for a fixed seed: wall-clock
// values are excluded here and live only in the manifest.
std::string summary_to_json(const MissionResult& result, const Instance& inst,
                            const MissionConfig& config);

// Everything needed to reproduce a run plus its wall-clock timings.
struct RunManifest {
    std::string tool_version;
    std::string command;
    std::map<std::string, std::string> config;
    std::string instance_path;
    std::string instance_hash;  // fnv1a64 over the instance document bytes
    std::uint64_t seed = 0;
    std::map<std::string, double> timings_s;
    std::string created_at;
};

std::string manifest_to_json(const RunManifest& manifest);

}  // namespace droneplan
