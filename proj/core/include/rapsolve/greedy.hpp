#pragma once

#include <vector>

#include "rapsolve/instance.hpp"

namespace rapsolve {

// Cost paid per unit of log-unreliability removed by one component of
// type (i, j): c_ij / (-ln(1 - r_ij)). The greedy strips expensive-per-value
// components first.
struct GreedyRate {
    int i = 0;
    int j = 0;  // normalized component index
    double rate = 0.0;
};

// All index pairs sorted by non-increasing rate, ties by (i, j) ascending.
std::vector<GreedyRate> greedy_rates(const NormalizedInstance& ninst);

// Starting at the maximum configuration u, walks the rate order and strips
// each component type while the system stays reliable and the subsystem
// non-empty; one unit is put back on the first violation. The result is a
// reliable configuration; its cost is the budget c0 the caller should record
// on the instance.
//
// Throws EmptySubsystemError if some subsystem has no capacity at all, and
// InfeasibleError if even the maximum configuration misses r0.
Config greedy_feasible(const NormalizedInstance& ninst, double r0);

}  // namespace rapsolve
