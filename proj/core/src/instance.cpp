#include "rapsolve/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rapsolve {

namespace {

std::string ij(int i, int j) {
    return "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

void check_shape(const Layout& layout, std::size_t n, const char* what) {
    if (n != static_cast<std::size_t>(layout.total())) {
        throw ValidationError(std::string(what) + " has " + std::to_string(n) +
                              " entries, expected " + std::to_string(layout.total()));
    }
}

}  // namespace

Layout::Layout(std::vector<int> type_counts) : k_(std::move(type_counts)) {
    offset_.resize(k_.size() + 1, 0);
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (k_[i] < 1) {
            throw ValidationError("k[" + std::to_string(i) + "] must be a positive integer");
        }
        offset_[i + 1] = offset_[i] + k_[i];
    }
}

std::pair<int, int> Layout::split(int f) const {
    for (int i = 0; i < subsystems(); ++i) {
        if (f < offset_[static_cast<std::size_t>(i) + 1]) return {i, f - offset(i)};
    }
    throw ValidationError("flat index " + std::to_string(f) + " out of range");
}

void validate(const Instance& inst) {
    const Layout& lay = inst.layout;
    if (lay.subsystems() < 1) throw ValidationError("n must be a positive integer");
    check_shape(lay, inst.r.size(), "r");
    check_shape(lay, inst.cost.size(), "c");
    check_shape(lay, inst.lower.size(), "l");
    check_shape(lay, inst.upper.size(), "u");

    __int128 worst_cost = 0;
    for (int i = 0; i < lay.subsystems(); ++i) {
        for (int j = 0; j < lay.types(i); ++j) {
            const int f = lay.flat(i, j);
            if (!(inst.r[f] > 0.0 && inst.r[f] < 1.0)) {
                throw ValidationError("r" + ij(i, j) + " must lie strictly in (0,1)");
            }
            if (inst.cost[f] < 1 || inst.cost[f] > kMaxUnitCost) {
                throw ValidationError("c" + ij(i, j) + " must be an integer in [1, " +
                                      std::to_string(kMaxUnitCost) + "]");
            }
            if (inst.lower[f] < 0) {
                throw ValidationError("l" + ij(i, j) + " must be >= 0");
            }
            if (inst.upper[f] < inst.lower[f]) {
                throw ValidationError("u" + ij(i, j) + " must be >= l" + ij(i, j));
            }
            if (inst.upper[f] > kMaxUpperBound) {
                throw ValidationError("u" + ij(i, j) + " exceeds the ingestion bound " +
                                      std::to_string(kMaxUpperBound));
            }
            worst_cost += static_cast<__int128>(inst.cost[f]) * inst.upper[f];
        }
    }
    if (worst_cost > static_cast<__int128>(INT64_MAX)) {
        throw ValidationError("sum of c_ij*u_ij overflows 64-bit cost arithmetic");
    }
    if (!(inst.r0 > 0.0 && inst.r0 < 1.0)) {
        throw ValidationError("R0 must lie strictly in (0,1)");
    }
}

NormalizedInstance normalize(const Instance& inst) {
    validate(inst);
    const Layout& lay = inst.layout;
    const int n = lay.subsystems();
    const int total = lay.total();

    NormalizedInstance out;
    out.layout = lay;
    out.r.resize(total);
    out.log_unrel.resize(total);
    out.cost.resize(total);
    out.upper.resize(total);
    out.perm.resize(total);
    out.shift = inst.lower;
    out.baseline_log_unrel.assign(static_cast<std::size_t>(n), 0.0);
    out.min_units.resize(static_cast<std::size_t>(n));
    out.r0 = inst.r0;

    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
        const int k = lay.types(i);
        order.resize(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return inst.cost[lay.flat(i, a)] > inst.cost[lay.flat(i, b)];
        });

        Count l_sum = 0;
        for (int j = 0; j < k; ++j) {
            const int src = lay.flat(i, order[static_cast<std::size_t>(j)]);
            const int dst = lay.flat(i, j);
            out.r[dst] = inst.r[src];
            out.log_unrel[dst] = std::log1p(-inst.r[src]);
            out.cost[dst] = inst.cost[src];
            out.upper[dst] = inst.upper[src] - inst.lower[src];
            out.perm[dst] = src;
            out.baseline_log_unrel[static_cast<std::size_t>(i)] +=
                static_cast<double>(inst.lower[src]) * std::log1p(-inst.r[src]);
            l_sum += inst.lower[src];
        }
        out.min_units[static_cast<std::size_t>(i)] = l_sum >= 1 ? 0 : 1;
    }
    return out;
}

Config denormalize(const NormalizedInstance& ninst, const Config& x) {
    check_shape(ninst.layout, x.size(), "configuration");
    Config out(x.size());
    for (int f = 0; f < ninst.layout.total(); ++f) {
        const int src = ninst.perm[static_cast<std::size_t>(f)];
        out[static_cast<std::size_t>(src)] = x[static_cast<std::size_t>(f)] +
                                             ninst.shift[static_cast<std::size_t>(src)];
    }
    return out;
}

Config normalize_config(const NormalizedInstance& ninst, const Config& x_orig) {
    check_shape(ninst.layout, x_orig.size(), "configuration");
    Config out(x_orig.size());
    for (int f = 0; f < ninst.layout.total(); ++f) {
        const int src = ninst.perm[static_cast<std::size_t>(f)];
        out[static_cast<std::size_t>(f)] = x_orig[static_cast<std::size_t>(src)] -
                                           ninst.shift[static_cast<std::size_t>(src)];
        if (out[static_cast<std::size_t>(f)] < 0) {
            throw ValidationError("configuration entry below the instance lower bound");
        }
    }
    return out;
}

double system_reliability(const Instance& inst, const Config& x) {
    check_shape(inst.layout, x.size(), "configuration");
    double rel = 1.0;
    for (int i = 0; i < inst.layout.subsystems(); ++i) {
        double log_unrel = 0.0;
        for (int j = 0; j < inst.layout.types(i); ++j) {
            const int f = inst.layout.flat(i, j);
            log_unrel += static_cast<double>(x[static_cast<std::size_t>(f)]) *
                         std::log1p(-inst.r[static_cast<std::size_t>(f)]);
        }
        rel *= -std::expm1(log_unrel);
    }
    return rel;
}

double subsystem_log_unrel(const NormalizedInstance& ninst, const Config& x, int i) {
    double log_unrel = ninst.baseline_log_unrel[static_cast<std::size_t>(i)];
    for (int j = 0; j < ninst.layout.types(i); ++j) {
        const int f = ninst.layout.flat(i, j);
        log_unrel += static_cast<double>(x[static_cast<std::size_t>(f)]) *
                     ninst.log_unrel[static_cast<std::size_t>(f)];
    }
    return log_unrel;
}

double system_reliability(const NormalizedInstance& ninst, const Config& x) {
    check_shape(ninst.layout, x.size(), "configuration");
    double rel = 1.0;
    for (int i = 0; i < ninst.layout.subsystems(); ++i) {
        rel *= -std::expm1(subsystem_log_unrel(ninst, x, i));
    }
    return rel;
}

bool is_reliable(const Instance& inst, const Config& x, double r0) {
    return system_reliability(inst, x) >= r0;
}

bool is_reliable(const NormalizedInstance& ninst, const Config& x, double r0) {
    return system_reliability(ninst, x) >= r0;
}

Money total_cost(const Instance& inst, const Config& x) {
    check_shape(inst.layout, x.size(), "configuration");
    Money sum = 0;
    for (std::size_t f = 0; f < x.size(); ++f) sum += inst.cost[f] * x[f];
    return sum;
}

Money total_cost(const NormalizedInstance& ninst, const Config& x) {
    check_shape(ninst.layout, x.size(), "configuration");
    Money sum = 0;
    for (std::size_t f = 0; f < x.size(); ++f) sum += ninst.cost[f] * x[f];
    return sum;
}

SlackVector slacks(const NormalizedInstance& ninst, const Config& x) {
    check_shape(ninst.layout, x.size(), "configuration");
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    SlackVector s;
    s.d.resize(static_cast<std::size_t>(ninst.layout.subsystems()));
    s.t.resize(x.size());
    for (int i = 0; i < ninst.layout.subsystems(); ++i) {
        Count units = 0;
        for (int j = 0; j < ninst.layout.types(i); ++j) {
            const auto f = static_cast<std::size_t>(ninst.layout.flat(i, j));
            units += x[f];
            s.t[f] = ninst.upper[f] - x[f];
        }
        s.d[static_cast<std::size_t>(i)] = units - ninst.min_units[static_cast<std::size_t>(i)];
    }
    s.b = ninst.c0 - total_cost(ninst, x);
    return s;
}

bool lrp_feasible(const NormalizedInstance& ninst, const Config& x) {
    check_shape(ninst.layout, x.size(), "configuration");
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    Money spent = 0;
    for (int i = 0; i < ninst.layout.subsystems(); ++i) {
        Count units = 0;
        for (int j = 0; j < ninst.layout.types(i); ++j) {
            const auto f = static_cast<std::size_t>(ninst.layout.flat(i, j));
            if (x[f] < 0 || x[f] > ninst.upper[f]) return false;
            units += x[f];
            spent += ninst.cost[f] * x[f];
        }
        if (units < ninst.min_units[static_cast<std::size_t>(i)]) return false;
    }
    return spent <= ninst.c0;
}

}  // namespace rapsolve
