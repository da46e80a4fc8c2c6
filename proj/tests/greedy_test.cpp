#include <random>

#include <doctest.h>

#include "rapsolve/greedy.hpp"
#include "rapsolve/oracle.hpp"
#include "test_util.hpp"

using namespace rapsolve;
using raptest::make_instance;
using raptest::t1_instance;

TEST_CASE("rates of t1") {
    const NormalizedInstance ninst = normalize(t1_instance());
    const std::vector<GreedyRate> rates = greedy_rates(ninst);
    REQUIRE(rates.size() == 2);
    CHECK(rates[0].i == 0);
    CHECK(rates[0].j == 0);
    CHECK(rates[0].rate == doctest::Approx(2.1714724095162588).epsilon(1e-12));
    CHECK(rates[1].j == 1);
    CHECK(rates[1].rate == doctest::Approx(1.8640048036788353).epsilon(1e-12));
}

TEST_CASE("rate ties fall back to index order") {
    const Instance inst =
        make_instance({1, 1}, {{0.9}, {0.9}}, {{5}, {5}}, {{0}, {0}}, {{2}, {2}}, 0.5);
    const std::vector<GreedyRate> rates = greedy_rates(normalize(inst));
    REQUIRE(rates.size() == 2);
    CHECK(rates[0].i == 0);
    CHECK(rates[1].i == 1);
}

TEST_CASE("single component instance has a singleton rate list") {
    const Instance inst = make_instance({1}, {{0.9}}, {{5}}, {{0}}, {{2}}, 0.5);
    CHECK(greedy_rates(normalize(inst)).size() == 1);
}

TEST_CASE("greedy walks t1 to (1,1)") {
    const NormalizedInstance ninst = normalize(t1_instance());
    const Config y0 = greedy_feasible(ninst, 0.97);
    CHECK(y0 == Config{1, 1});
    CHECK(total_cost(ninst, y0) == 8);
}

TEST_CASE("greedy with zero floor keeps one unit of the last-processed type") {
    const NormalizedInstance ninst = normalize(t1_instance());
    const Config y0 = greedy_feasible(ninst, 0.0);
    CHECK(y0 == Config{0, 1});
}

TEST_CASE("greedy reports infeasibility at the maximum configuration") {
    const NormalizedInstance ninst = normalize(t1_instance());
    // R(u) = 0.9996
    CHECK_THROWS_AS(greedy_feasible(ninst, 0.9999), InfeasibleError);
}

TEST_CASE("greedy rejects a subsystem with no capacity") {
    const Instance inst =
        make_instance({1, 1}, {{0.9}, {0.9}}, {{5}, {5}}, {{0}, {0}}, {{2}, {0}}, 0.5);
    CHECK_THROWS_AS(greedy_feasible(normalize(inst), 0.5), EmptySubsystemError);
}

TEST_CASE("greedy is deterministic") {
    std::mt19937_64 eng(5150);
    const Instance inst = raptest::random_instance(eng);
    const NormalizedInstance ninst = normalize(inst);
    CHECK(greedy_feasible(ninst, inst.r0) == greedy_feasible(ninst, inst.r0));
}

TEST_CASE("greedy output is feasible and bounds the optimum") {
    std::mt19937_64 eng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = raptest::random_instance(eng);
        const NormalizedInstance ninst = normalize(inst);
        const Config y0 = greedy_feasible(ninst, inst.r0);

        CHECK(is_reliable(ninst, y0, inst.r0));
        for (std::size_t f = 0; f < y0.size(); ++f) {
            CHECK(y0[f] >= 0);
            CHECK(y0[f] <= ninst.upper[f]);
        }
        for (int i = 0; i < ninst.layout.subsystems(); ++i) {
            Count units = 0;
            for (int j = 0; j < ninst.layout.types(i); ++j) {
                units += y0[static_cast<std::size_t>(ninst.layout.flat(i, j))];
            }
            CHECK(units >= 1);
        }

        const OracleResult truth = brute_force_optimum(inst);
        REQUIRE(truth.optimum.has_value());
        CHECK(total_cost(ninst, y0) >= truth.opt_cost);
    }
}
