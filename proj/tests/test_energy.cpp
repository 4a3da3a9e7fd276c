#include <doctest.h>

#include "droneplan/energy.hpp"
#include "droneplan/rng.hpp"
#include "oracles.hpp"

using namespace droneplan;

namespace {
const UavSpec kUav{};      // frame 10 kg, battery 10 kg, v 10 m/s, 8 rotors, 0.27 m^2
const Environment kEnv{};  // g 9.81, rho 1.2250
}  // namespace

TEST_CASE("energy per meter is zero at zero mass") {
    CHECK(energy_per_meter(0.0, kUav, kEnv) == 0.0);
}

TEST_CASE("energy per meter at the reference fleet parameters") {
    // Frozen from the independent evaluation: 119.4644221652 J/m empty,
    // 166.9566055338 J/m at the full 5 kg payload.
    CHECK(energy_per_meter(20.0, kUav, kEnv) == doctest::Approx(119.4644221652).epsilon(1e-3));
    CHECK(energy_per_meter(25.0, kUav, kEnv) == doctest::Approx(166.9566055338).epsilon(1e-3));
}

TEST_CASE("energy per meter matches the oracle across masses") {
    for (double m = 0.5; m < 40.0; m += 0.7) {
        CHECK(energy_per_meter(m, kUav, kEnv) ==
              doctest::Approx(oracle::energy_per_meter(m)).epsilon(1e-12));
    }
}

TEST_CASE("energy per meter grows as mass^(3/2)") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const double m = rng.uniform(0.1, 30.0);
        CHECK(energy_per_meter(4.0 * m, kUav, kEnv) ==
              doctest::Approx(8.0 * energy_per_meter(m, kUav, kEnv)).epsilon(1e-12));
    }
}

TEST_CASE("energy per meter is strictly increasing in mass") {
    double prev = energy_per_meter(0.0, kUav, kEnv);
    for (double m = 0.5; m < 30.0; m += 0.5) {
        const double cur = energy_per_meter(m, kUav, kEnv);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("leg energy basics") {
    CHECK(leg_energy(0.0, 2.0, kUav, kEnv) == 0.0);
    CHECK(leg_energy(1000.0, 0.0, kUav, kEnv) == doctest::Approx(119464.4221652).epsilon(1e-3));
    CHECK(leg_energy(1500.0, 2.0, kUav, kEnv) > leg_energy(1500.0, 0.0, kUav, kEnv));
}
