#include "rapsolve/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rapsolve {

std::vector<GreedyRate> greedy_rates(const NormalizedInstance& ninst) {
    const Layout& lay = ninst.layout;
    std::vector<GreedyRate> rates;
    rates.reserve(static_cast<std::size_t>(lay.total()));
    for (int i = 0; i < lay.subsystems(); ++i) {
        for (int j = 0; j < lay.types(i); ++j) {
            const auto f = static_cast<std::size_t>(lay.flat(i, j));
            rates.push_back({i, j, static_cast<double>(ninst.cost[f]) / -ninst.log_unrel[f]});
        }
    }
    // stable sort keeps the (i, j) ascending construction order on ties
    std::stable_sort(rates.begin(), rates.end(),
                     [](const GreedyRate& a, const GreedyRate& b) { return a.rate > b.rate; });
    return rates;
}

Config greedy_feasible(const NormalizedInstance& ninst, double r0) {
    const Layout& lay = ninst.layout;
    const int n = lay.subsystems();

    for (int i = 0; i < n; ++i) {
        Count capacity = 0;
        for (int j = 0; j < lay.types(i); ++j) {
            capacity += ninst.upper[static_cast<std::size_t>(lay.flat(i, j))];
        }
        if (capacity < ninst.min_units[static_cast<std::size_t>(i)]) {
            throw EmptySubsystemError("subsystem " + std::to_string(i) +
                                      " has zero total upper bound");
        }
    }

    Config y = ninst.upper;
    std::vector<double> factor(static_cast<std::size_t>(n));
    std::vector<Count> units(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        factor[static_cast<std::size_t>(i)] = -std::expm1(subsystem_log_unrel(ninst, y, i));
        for (int j = 0; j < lay.types(i); ++j) {
            units[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(lay.flat(i, j))];
        }
    }
    // Same factor routine and same left-to-right product as
    // system_reliability(), so the incremental values are bit-identical.
    const auto system_rel = [&] {
        double rel = 1.0;
        for (int i = 0; i < n; ++i) rel *= factor[static_cast<std::size_t>(i)];
        return rel;
    };

    if (system_rel() < r0) {
        throw InfeasibleError("even the maximum configuration has reliability below R0");
    }

    for (const GreedyRate& gr : greedy_rates(ninst)) {
        const auto i = static_cast<std::size_t>(gr.i);
        const auto f = static_cast<std::size_t>(lay.flat(gr.i, gr.j));
        bool reliable = true;
        bool non_empty = true;
        while (reliable && non_empty && y[f] > 0) {
            --y[f];
            --units[i];
            factor[i] = -std::expm1(subsystem_log_unrel(ninst, y, gr.i));
            if (units[i] < ninst.min_units[i]) non_empty = false;
            if (system_rel() < r0) reliable = false;
            if (!reliable || !non_empty) {
                ++y[f];
                ++units[i];
                factor[i] = -std::expm1(subsystem_log_unrel(ninst, y, gr.i));
            }
        }
    }
    return y;
}

}  // namespace rapsolve
