#include "rapsolve/oracle.hpp"

#include <string>

namespace rapsolve {

namespace {

void check_enumeration_budget(std::span<const Count> low, std::span<const Count> high,
                              std::uint64_t max_points) {
    __int128 points = 1;
    for (std::size_t f = 0; f < low.size(); ++f) {
        points *= static_cast<__int128>(high[f] - low[f] + 1);
        if (points > static_cast<__int128>(max_points)) {
            throw EnumerationLimitError("enumeration would exceed " +
                                        std::to_string(max_points) + " points");
        }
    }
}

// Row-major odometer over [low, high]; returns false once exhausted.
bool advance(Config& x, std::span<const Count> low, std::span<const Count> high) {
    for (std::size_t f = x.size(); f-- > 0;) {
        if (x[f] < high[f]) {
            ++x[f];
            for (std::size_t g = f + 1; g < x.size(); ++g) x[g] = low[g];
            return true;
        }
    }
    return false;
}

bool subsystems_non_empty(const Layout& lay, const Config& x) {
    for (int i = 0; i < lay.subsystems(); ++i) {
        Count units = 0;
        for (int j = 0; j < lay.types(i); ++j) {
            units += x[static_cast<std::size_t>(lay.flat(i, j))];
        }
        if (units < 1) return false;
    }
    return true;
}

}  // namespace

OracleResult brute_force_optimum(const Instance& inst, std::uint64_t max_points) {
    validate(inst);
    check_enumeration_budget(inst.lower, inst.upper, max_points);

    OracleResult result;
    Config x = inst.lower;
    bool more = true;
    while (more) {
        if (subsystems_non_empty(inst.layout, x) && is_reliable(inst, x, inst.r0)) {
            ++result.feasible_points;
            const Money cost = total_cost(inst, x);
            const bool better = !result.optimum.has_value() || cost < result.opt_cost ||
                                (cost == result.opt_cost && x < *result.optimum);
            if (better) {
                result.optimum = x;
                result.opt_cost = cost;
            }
        }
        more = advance(x, inst.lower, inst.upper);
    }
    return result;
}

bool brute_force_testset_property(const NormalizedInstance& ninst,
                                  std::span<const TestMove> moves, std::uint64_t max_points) {
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    const std::vector<Count> zeros(static_cast<std::size_t>(ninst.layout.total()), 0);
    check_enumeration_budget(zeros, ninst.upper, max_points);

    // Pass 1: the (cost, lex) minimum of the LRP-feasible fiber.
    Config minimum;
    Money minimum_cost = 0;
    {
        Config x = zeros;
        bool more = true;
        while (more) {
            if (lrp_feasible(ninst, x)) {
                const Money cost = total_cost(ninst, x);
                if (minimum.empty() || cost < minimum_cost ||
                    (cost == minimum_cost && x < minimum)) {
                    minimum = x;
                    minimum_cost = cost;
                }
            }
            more = advance(x, zeros, ninst.upper);
        }
        if (minimum.empty()) return false;  // empty fiber: nothing the moves could certify
    }

    // Pass 2: every non-minimal point improves by some move; the minimum
    // admits no feasible subtraction at all.
    Config x = zeros;
    bool more = true;
    while (more) {
        if (lrp_feasible(ninst, x)) {
            const Money cost = total_cost(ninst, x);
            const bool is_minimum = (x == minimum);
            bool improvable = false;
            for (const TestMove& move : moves) {
                const Config y = apply_forward(x, move);
                if (!lrp_feasible(ninst, y)) continue;
                if (is_minimum) return false;
                const Money y_cost = cost - move.cost_delta;
                if (!(y_cost < cost || (y_cost == cost && y < x))) return false;
                improvable = true;
                break;
            }
            if (!is_minimum && !improvable) return false;
        }
        more = advance(x, zeros, ninst.upper);
    }
    return true;
}

}  // namespace rapsolve
