#include "droneplan/instance.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "droneplan/rng.hpp"

namespace droneplan {

namespace {

constexpr int kSchemaVersion = 1;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw validation_error(std::string(name) + " must be strictly positive");
    }
}

}  // namespace

void UavSpec::validate() const {
    require_positive(frame_mass_kg, "frame_mass_kg");
    require_positive(battery_mass_kg, "battery_mass_kg");
    require_positive(capacity_kg, "capacity_kg");
    require_positive(battery_capacity_joule, "battery_capacity_joule");
    require_positive(speed_mps, "speed_mps");
    require_positive(rotor_count, "rotor_count");
    require_positive(rotor_disc_area_m2, "rotor_disc_area_m2");
}

void Environment::validate() const {
    require_positive(gravity_mps2, "gravity_mps2");
    require_positive(air_density_kgm3, "air_density_kgm3");
}

void EconomicParams::validate() const {
    require_positive(price_constant_k, "price_constant_k");
    if (discount_tiers.size() != tier_times_s.size() + 1) {
        throw validation_error("need exactly one more discount tier than tier time");
    }
    for (std::size_t i = 0; i + 1 < discount_tiers.size(); ++i) {
        if (!(discount_tiers[i] > discount_tiers[i + 1])) {
            throw validation_error("discount tiers must be strictly decreasing");
        }
    }
    for (std::size_t i = 0; i + 1 < tier_times_s.size(); ++i) {
        if (!(tier_times_s[i] < tier_times_s[i + 1])) {
            throw validation_error("tier times must be strictly increasing");
        }
    }
    for (double t : tier_times_s) require_positive(t, "tier time");
}

void Instance::validate() const {
    depot.validate();
    uav.validate();
    env.validate();
    econ.validate();
    for (std::size_t i = 0; i < customers.size(); ++i) {
        const Customer& c = customers[i];
        if (c.id != static_cast<int>(i) + 1) {
            throw validation_error("customer ids must be 1..n in order, got id " +
                                   std::to_string(c.id) + " at index " + std::to_string(i));
        }
        c.location.validate();
        if (!(c.package_weight_kg > 0.0)) {
            throw validation_error("customer " + std::to_string(c.id) +
                                   " has non-positive package weight");
        }
        if (c.package_weight_kg > uav.capacity_kg) {
            throw validation_error("customer " + std::to_string(c.id) + " package weight " +
                                   std::to_string(c.package_weight_kg) +
                                   " kg exceeds UAV capacity " + std::to_string(uav.capacity_kg) +
                                   " kg");
        }
    }
}

DistanceMatrix build_distance_matrix(const Instance& inst) {
    std::vector<GeoPoint> points;
    points.reserve(inst.customers.size() + 1);
    points.push_back(inst.depot);
    for (const Customer& c : inst.customers) points.push_back(c.location);
    return DistanceMatrix(points);
}

Instance generate_instance(std::size_t n,
                           const GeoPoint& depot,
                           double radius_m,
                           const std::vector<double>& weight_choices,
                           const UavSpec& uav,
                           const Environment& env,
                           const EconomicParams& econ,
                           std::uint64_t seed) {
    depot.validate();
    require_positive(radius_m, "radius_m");
    if (weight_choices.empty()) {
        throw validation_error("weight_choices must not be empty");
    }
    for (double w : weight_choices) {
        require_positive(w, "package weight choice");
        if (w > uav.capacity_kg) {
            throw validation_error("weight choice " + std::to_string(w) +
                                   " kg exceeds UAV capacity " + std::to_string(uav.capacity_kg) +
                                   " kg");
        }
    }

    Instance inst;
    inst.depot = depot;
    inst.uav = uav;
    inst.env = env;
    inst.econ = econ;
    inst.seed = seed;
    inst.customers.reserve(n);

    Rng rng(seed);
    const double lat0 = depot.lat_deg * std::numbers::pi / 180.0;
    for (std::size_t i = 0; i < n; ++i) {
        // sqrt(u) on the radius makes the density uniform over the disc area.
        const double r = radius_m * std::sqrt(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        const double dlat = (r * std::cos(theta)) / kEarthRadiusM;
        const double dlon = (r * std::sin(theta)) / (kEarthRadiusM * std::cos(lat0));

        GeoPoint p;
        p.lat_deg = depot.lat_deg + dlat * 180.0 / std::numbers::pi;
        p.lon_deg = depot.lon_deg + dlon * 180.0 / std::numbers::pi;
        if (p.lon_deg >= 180.0) p.lon_deg -= 360.0;
        if (p.lon_deg < -180.0) p.lon_deg += 360.0;
        p.validate();  // a radius reaching past a pole is rejected, not wrapped

        const double w = weight_choices[rng.uniform_index(weight_choices.size())];
        inst.customers.push_back(Customer{static_cast<int>(i) + 1, p, w});
    }

    inst.validate();
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["depot"] = {{"lat", inst.depot.lat_deg}, {"lon", inst.depot.lon_deg}};
    doc["uav"] = {{"frame_mass_kg", inst.uav.frame_mass_kg},
                  {"battery_mass_kg", inst.uav.battery_mass_kg},
                  {"capacity_kg", inst.uav.capacity_kg},
                  {"battery_capacity_joule", inst.uav.battery_capacity_joule},
                  {"speed_mps", inst.uav.speed_mps},
                  {"rotor_count", inst.uav.rotor_count},
                  {"rotor_disc_area_m2", inst.uav.rotor_disc_area_m2}};
    doc["environment"] = {{"gravity_mps2", inst.env.gravity_mps2},
                          {"air_density_kgm3", inst.env.air_density_kgm3}};
    doc["economics"] = {{"price_constant_k", inst.econ.price_constant_k},
                        {"discount_tiers", inst.econ.discount_tiers},
                        {"tier_times_s", inst.econ.tier_times_s}};
    doc["seed"] = inst.seed;
    nlohmann::ordered_json customers = nlohmann::ordered_json::array();
    for (const Customer& c : inst.customers) {
        customers.push_back({{"id", c.id},
                             {"lat", c.location.lat_deg},
                             {"lon", c.location.lon_deg},
                             {"weight_kg", c.package_weight_kg}});
    }
    doc["customers"] = std::move(customers);
    return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw schema_error(std::string("malformed instance document: ") + e.what());
    }

    try {
        if (!doc.contains("schema_version")) {
            throw schema_error("instance document missing schema_version");
        }
        const int version = doc.at("schema_version").get<int>();
        if (version != kSchemaVersion) {
            throw schema_error("unsupported instance schema_version " + std::to_string(version) +
                               ", expected " + std::to_string(kSchemaVersion));
        }
        for (const char* key : {"depot", "uav", "environment", "economics", "customers"}) {
            if (!doc.contains(key)) {
                throw schema_error(std::string("instance document missing \"") + key + "\" key");
            }
        }

        Instance inst;
        const auto& depot = doc.at("depot");
        inst.depot = GeoPoint{depot.at("lat").get<double>(), depot.at("lon").get<double>()};

        const auto& uav = doc.at("uav");
        inst.uav.frame_mass_kg = uav.at("frame_mass_kg").get<double>();
        inst.uav.battery_mass_kg = uav.at("battery_mass_kg").get<double>();
        inst.uav.capacity_kg = uav.at("capacity_kg").get<double>();
        inst.uav.battery_capacity_joule = uav.at("battery_capacity_joule").get<double>();
        inst.uav.speed_mps = uav.at("speed_mps").get<double>();
        inst.uav.rotor_count = uav.at("rotor_count").get<double>();
        inst.uav.rotor_disc_area_m2 = uav.at("rotor_disc_area_m2").get<double>();

        const auto& env = doc.at("environment");
        inst.env.gravity_mps2 = env.at("gravity_mps2").get<double>();
        inst.env.air_density_kgm3 = env.at("air_density_kgm3").get<double>();

        const auto& econ = doc.at("economics");
        inst.econ.price_constant_k = econ.at("price_constant_k").get<double>();
        inst.econ.discount_tiers = econ.at("discount_tiers").get<std::vector<double>>();
        inst.econ.tier_times_s = econ.at("tier_times_s").get<std::vector<double>>();

        inst.seed = doc.value("seed", std::uint64_t{0});

        for (const auto& c : doc.at("customers")) {
            Customer cust;
            cust.id = c.at("id").get<int>();
            cust.location = GeoPoint{c.at("lat").get<double>(), c.at("lon").get<double>()};
            cust.package_weight_kg = c.at("weight_kg").get<double>();
            inst.customers.push_back(cust);
        }

        inst.validate();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("instance document field error: ") + e.what());
    }
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open " + path + " for writing");
    }
    out << instance_to_json(inst);
    if (!out) {
        throw io_error("failed to write " + path);
    }
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path + " for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_json(buf.str());
}

}  // namespace droneplan
