#include <algorithm>
#include <random>

#include <doctest.h>

#include "rapsolve/oracle.hpp"
#include "test_util.hpp"

using namespace rapsolve;
using raptest::make_instance;
using raptest::t1_instance;

TEST_CASE("oracle solves t1 by enumeration") {
    const OracleResult result = brute_force_optimum(t1_instance());
    REQUIRE(result.optimum.has_value());
    CHECK(*result.optimum == Config{1, 1});
    CHECK(result.opt_cost == 8);
    CHECK(result.feasible_points == 5);
}

TEST_CASE("oracle reports infeasibility") {
    Instance inst = t1_instance();
    inst.r0 = 0.9999;  // R(u) = 0.9996
    const OracleResult result = brute_force_optimum(inst);
    CHECK_FALSE(result.optimum.has_value());
    CHECK(result.feasible_points == 0);
}

TEST_CASE("oracle with a tiny floor keeps one cheapest unit per subsystem") {
    const Instance inst = make_instance(
        {2, 2}, {{0.9, 0.8}, {0.9, 0.8}}, {{7, 4}, {2, 9}},
        {{0, 0}, {0, 0}}, {{2, 2}, {2, 2}}, 1e-12);
    const OracleResult result = brute_force_optimum(inst);
    REQUIRE(result.optimum.has_value());
    CHECK(*result.optimum == Config{0, 1, 1, 0});
    CHECK(result.opt_cost == 6);
}

TEST_CASE("oracle copes with zero-width ranges") {
    const Instance inst = make_instance({2}, {{0.9, 0.8}}, {{5, 3}}, {{0, 0}}, {{0, 2}}, 0.5);
    const OracleResult result = brute_force_optimum(inst);
    REQUIRE(result.optimum.has_value());
    CHECK(*result.optimum == Config{0, 1});  // 0.8 >= 0.5
}

TEST_CASE("oracle enforces its enumeration budget") {
    Instance inst = t1_instance();
    inst.upper = {4000, 4000};
    CHECK_THROWS_AS(brute_force_optimum(inst, 1'000'000), EnumerationLimitError);
}

TEST_CASE("oracle optimum is stable under component permutations") {
    std::mt19937_64 eng(246);
    for (int trial = 0; trial < 30; ++trial) {
        const Instance inst = raptest::random_instance(eng);
        const OracleResult base = brute_force_optimum(inst);

        // reverse the component order inside every subsystem
        Instance flipped = inst;
        for (int i = 0; i < inst.layout.subsystems(); ++i) {
            const auto first = static_cast<std::ptrdiff_t>(inst.layout.offset(i));
            const auto last = first + inst.layout.types(i);
            std::reverse(flipped.r.begin() + first, flipped.r.begin() + last);
            std::reverse(flipped.cost.begin() + first, flipped.cost.begin() + last);
            std::reverse(flipped.lower.begin() + first, flipped.lower.begin() + last);
            std::reverse(flipped.upper.begin() + first, flipped.upper.begin() + last);
        }
        const OracleResult mirrored = brute_force_optimum(flipped);

        REQUIRE(base.optimum.has_value() == mirrored.optimum.has_value());
        if (base.optimum.has_value()) {
            CHECK(base.opt_cost == mirrored.opt_cost);
            CHECK(base.feasible_points == mirrored.feasible_points);
        }
    }
}

TEST_CASE("oracle optimum cost moves the right way with u and R0") {
    std::mt19937_64 eng(135);
    raptest::RandomSpec spec;
    spec.n_max = 3;  // keeps the widened instance inside the enumeration budget
    spec.u_max = 2;
    for (int trial = 0; trial < 30; ++trial) {
        const Instance inst = raptest::random_instance(eng, spec);
        const OracleResult base = brute_force_optimum(inst);
        REQUIRE(base.optimum.has_value());

        Instance wider = inst;
        for (Count& u : wider.upper) ++u;
        const OracleResult with_wider = brute_force_optimum(wider);
        REQUIRE(with_wider.optimum.has_value());
        CHECK(with_wider.opt_cost <= base.opt_cost);

        Instance stricter = inst;
        stricter.r0 = inst.r0 + 0.5 * (system_reliability(inst, inst.upper) - inst.r0);
        const OracleResult with_stricter = brute_force_optimum(stricter);
        REQUIRE(with_stricter.optimum.has_value());
        CHECK(with_stricter.opt_cost >= base.opt_cost);
    }
}
