#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rapsolve/instance.hpp"
#include "rapsolve/test_set.hpp"

namespace rapsolve {

// Total order: cost first, then lexicographic on the flat variable order
// (x_11 largest). Equal-cost configurations compare by plain vector
// lexicographic order, smallest vector first.
bool less_c(const Config& a, const Config& b, std::span<const Money> cost);

// The cheapest configuration satisfying the linear constraints alone: for
// each subsystem that must be non-empty, one unit of its cheapest available
// component (on cost ties, the highest index, which is the lex-smaller
// configuration). Throws BudgetError if even that exceeds the budget.
Config lrp_optimum(const NormalizedInstance& ninst);

enum class Strategy {
    paper,      // FIFO frontier, exhaustive expansion with incumbent pruning
    bestfirst,  // priority frontier; stops once the frontier cannot improve
};

struct WalkOptions {
    Strategy strategy = Strategy::bestfirst;
    int threads = 1;          // > 1 enables the shared-frontier parallel mode
    bool early_stop = false;  // return the first improving reliable point
};

struct SolveReport {
    Config optimum;                // original coordinates
    Money opt_cost = 0;            // original coordinates
    double opt_reliability = 0.0;
    std::uint64_t nodes_generated = 0;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t nodes_pruned_bound = 0;
    std::uint64_t nodes_pruned_duplicate = 0;
    Money greedy_cost = 0;         // cost of the greedy point, original coordinates
    double wall_time_s = 0.0;
};

// Explores the reverse skeleton of the test set from the relaxed optimum.
// Every expansion adds each move to the current point; a candidate is kept
// only if it stays LRP-feasible. Reliable candidates become incumbents and
// their paths stop; candidates already beaten by an incumbent or already
// visited are pruned. The walk returns the best incumbent, seeded with y0.
//
// Counter determinism is only guaranteed single-threaded; the returned
// optimum is identical in all modes.
SolveReport walk_back(const NormalizedInstance& ninst, std::span<const TestMove> moves,
                      const Config& y0, double r0, const WalkOptions& options = {});

}  // namespace rapsolve
