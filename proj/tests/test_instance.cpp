#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "droneplan/instance.hpp"
#include "droneplan/rng.hpp"
#include "oracles.hpp"

using namespace droneplan;

namespace {

const GeoPoint kHeathrow{51.4700, -0.4543};
const std::vector<double> kWeights{0.5, 1.0, 1.5, 2.0};

Instance heathrow10(std::uint64_t seed = 7) {
    return generate_instance(10, kHeathrow, 10'000.0, kWeights, UavSpec{}, Environment{},
                             EconomicParams{}, seed);
}

struct TempFile {
    std::string path;
    explicit TempFile(const char* name)
        : path((std::filesystem::temp_directory_path() / name).string()) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("generate_instance n=0 gives an empty customer list") {
    const Instance inst = generate_instance(0, kHeathrow, 10'000.0, kWeights, UavSpec{},
                                            Environment{}, EconomicParams{}, 1);
    CHECK(inst.customers.empty());
}

TEST_CASE("generated weights come from the choice set") {
    const Instance inst = heathrow10();
    std::set<double> allowed(kWeights.begin(), kWeights.end());
    for (const Customer& c : inst.customers) {
        CHECK(allowed.count(c.package_weight_kg) == 1);
    }
}

TEST_CASE("generation is deterministic per seed") {
    const Instance a = heathrow10(99);
    const Instance b = heathrow10(99);
    REQUIRE(a.customers.size() == b.customers.size());
    for (std::size_t i = 0; i < a.customers.size(); ++i) {
        CHECK(a.customers[i].location.lat_deg == b.customers[i].location.lat_deg);
        CHECK(a.customers[i].location.lon_deg == b.customers[i].location.lon_deg);
        CHECK(a.customers[i].package_weight_kg == b.customers[i].package_weight_kg);
    }
    CHECK(instance_to_json(a) == instance_to_json(b));
}

TEST_CASE("customers land within the sampling radius") {
    Rng seeder(13);
    for (int trial = 0; trial < 25; ++trial) {
        const double radius = 1000.0 + 9000.0 * (trial / 24.0);
        const Instance inst = generate_instance(40, kHeathrow, radius, kWeights, UavSpec{},
                                                Environment{}, EconomicParams{}, seeder.next_u64());
        for (const Customer& c : inst.customers) {
            const double d = oracle::haversine_m(kHeathrow.lat_deg, kHeathrow.lon_deg,
                                                 c.location.lat_deg, c.location.lon_deg);
            CHECK(d <= radius + 1.0);
        }
    }
}

TEST_CASE("generate_instance rejects weights above capacity") {
    CHECK_THROWS_AS(generate_instance(3, kHeathrow, 5000.0, {1.0, 6.0}, UavSpec{}, Environment{},
                                      EconomicParams{}, 1),
                    validation_error);
}

TEST_CASE("instance save/load round-trip is identity") {
    const Instance inst = heathrow10(123);
    TempFile file("droneplan_roundtrip.json");
    save_instance(inst, file.path);
    const Instance loaded = load_instance(file.path);
    CHECK(instance_to_json(loaded) == instance_to_json(inst));
    CHECK(loaded.seed == inst.seed);
    REQUIRE(loaded.customers.size() == inst.customers.size());
    for (std::size_t i = 0; i < inst.customers.size(); ++i) {
        CHECK(loaded.customers[i].location.lat_deg == inst.customers[i].location.lat_deg);
        CHECK(loaded.customers[i].location.lon_deg == inst.customers[i].location.lon_deg);
        CHECK(loaded.customers[i].package_weight_kg == inst.customers[i].package_weight_kg);
    }
}

TEST_CASE("load errors are distinct per failure kind") {
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_instance("/nonexistent/droneplan.json"), io_error);
    }
    SUBCASE("malformed document") {
        CHECK_THROWS_AS(instance_from_json("{ not json"), schema_error);
    }
    SUBCASE("wrong schema version") {
        CHECK_THROWS_AS(instance_from_json(R"({"schema_version": 999})"), schema_error);
    }
    SUBCASE("missing customers key") {
        std::string doc = instance_to_json(heathrow10());
        const auto pos = doc.find("\"customers\"");
        REQUIRE(pos != std::string::npos);
        doc.replace(pos, 11, "\"patrons\"");
        CHECK_THROWS_AS(instance_from_json(doc), schema_error);
    }
    SUBCASE("weight above capacity") {
        Instance inst = heathrow10();
        inst.customers[3].package_weight_kg = 2.0;
        std::string doc = instance_to_json(inst);
        const auto pos = doc.find("\"weight_kg\": 2.0");
        REQUIRE(pos != std::string::npos);
        doc.replace(pos, 16, "\"weight_kg\": 9.5");
        CHECK_THROWS_AS(instance_from_json(doc), validation_error);
    }
}

TEST_CASE("instance validation enforces id sequence and capacity") {
    Instance inst = heathrow10();
    SUBCASE("duplicate id") {
        inst.customers[4].id = 4;
        CHECK_THROWS_AS(inst.validate(), validation_error);
    }
    SUBCASE("gap in ids") {
        inst.customers[9].id = 12;
        CHECK_THROWS_AS(inst.validate(), validation_error);
    }
    SUBCASE("zero weight") {
        inst.customers[0].package_weight_kg = 0.0;
        CHECK_THROWS_AS(inst.validate(), validation_error);
    }
}
