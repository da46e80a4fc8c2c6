#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "rapsolve/instance.hpp"
#include "rapsolve/test_set.hpp"

namespace rapsolve {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct OracleResult {
    std::optional<Config> optimum;  // original coordinates; empty means infeasible
    Money opt_cost = 0;
    std::uint64_t feasible_points = 0;
};

// Ground truth by exhaustive enumeration of l <= x <= u, keeping the
// (cost, lex)-minimal point among those with every subsystem non-empty and
// R(x) >= R0. Deliberately knows nothing about the test-set machinery.
// Throws EnumerationLimitError when prod(u_ij - l_ij + 1) exceeds the budget.
OracleResult brute_force_optimum(const Instance& inst,
                                 std::uint64_t max_points = kDefaultEnumerationBudget);

// Checks the defining property of a test set over the instance's own fiber:
// every LRP-feasible point other than the (cost, lex) minimum admits a move
// whose subtraction stays LRP-feasible and strictly improves the order, and
// the minimum admits none.
bool brute_force_testset_property(const NormalizedInstance& ninst,
                                  std::span<const TestMove> moves,
                                  std::uint64_t max_points = kDefaultEnumerationBudget);

}  // namespace rapsolve
