#include <doctest.h>

#include "droneplan/economics.hpp"

using namespace droneplan;

namespace {
const EconomicParams kEcon{};  // k = 1 money per kg*km, tiers 1, 1/2, 1/3 at 10/20 min
}  // namespace

TEST_CASE("base price is k * w * depot distance") {
    Customer c{1, {51.5, -0.45}, 2.0};
    // 2 kg over 5 km at 1 money/(kg*km).
    CHECK(base_price(c, 5000.0, kEcon) == doctest::Approx(10.0).epsilon(1e-12));

    Customer half{2, {51.5, -0.45}, 1.0};
    CHECK(base_price(c, 5000.0, kEcon) == doctest::Approx(2.0 * base_price(half, 5000.0, kEcon)));

    Customer tiny{3, {51.5, -0.45}, 1e-9};
    CHECK(base_price(tiny, 5000.0, kEcon) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("discount tiers at 10 and 20 minutes") {
    CHECK(discount_factor(5.0 * 60.0, kEcon) == 1.0);
    CHECK(discount_factor(15.0 * 60.0, kEcon) == 0.5);
    CHECK(discount_factor(25.0 * 60.0, kEcon) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("discount boundaries are closed on the left tier") {
    CHECK(discount_factor(0.0, kEcon) == 1.0);
    CHECK(discount_factor(600.0, kEcon) == 1.0);           // exactly t1 still pays full
    CHECK(discount_factor(600.0 + 1e-9, kEcon) == 0.5);
    CHECK(discount_factor(1200.0, kEcon) == 0.5);          // exactly t2 still pays half
    CHECK(discount_factor(1200.0 + 1e-9, kEcon) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("discount factor is a non-increasing step function of time") {
    double prev = discount_factor(0.0, kEcon);
    for (double t = 0.0; t <= 2000.0; t += 7.3) {
        const double cur = discount_factor(t, kEcon);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("arc savings splits revenue and transport cost") {
    // w=1 kg, depot distance 10 km, arc 2 km, arrival at 15 min: revenue
    // 10 * 1/2 = 5, cost 2, net 3.
    Customer c{1, {51.5, -0.45}, 1.0};
    const SavingsBreakdown mid = arc_savings(c, 2000.0, 10'000.0, 15.0 * 60.0, kEcon);
    CHECK(mid.revenue == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(mid.transport_cost == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mid.net == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(mid.net == mid.revenue - mid.transport_cost);

    // Same delivery reached within 5 min earns the full price: net 8.
    const SavingsBreakdown early = arc_savings(c, 2000.0, 10'000.0, 5.0 * 60.0, kEcon);
    CHECK(early.net == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(early.net > mid.net);
}

TEST_CASE("degenerate geometry: customer at the depot") {
    Customer c{1, {51.47, -0.4543}, 1.5};
    const SavingsBreakdown s = arc_savings(c, 0.0, 0.0, 100.0, kEcon);
    CHECK(s.revenue == 0.0);
    CHECK(s.transport_cost == 0.0);
    CHECK(s.net == 0.0);
}

TEST_CASE("economic parameter validation") {
    EconomicParams econ;
    SUBCASE("tiers must outnumber times by one") {
        econ.discount_tiers = {1.0, 0.5};
        CHECK_THROWS_AS(econ.validate(), validation_error);
    }
    SUBCASE("tiers must strictly decrease") {
        econ.discount_tiers = {1.0, 1.0, 0.5};
        CHECK_THROWS_AS(econ.validate(), validation_error);
    }
    SUBCASE("defaults are valid") { CHECK_NOTHROW(econ.validate()); }
}
