#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rapsolve/errors.hpp"

namespace rapsolve {

using Count = std::int64_t;  // component multiplicities and slack entries
using Money = std::int64_t;  // integer component costs

// Flat indexing over the ragged (subsystem, component type) space.
// Variables are laid out in the block order x_11 .. x_1k1, x_21 .. x_nkn;
// all lexicographic comparisons in the library refer to this order.
class Layout {
public:
    Layout() = default;
    explicit Layout(std::vector<int> type_counts);

    int subsystems() const { return static_cast<int>(k_.size()); }
    int types(int i) const { return k_[static_cast<std::size_t>(i)]; }
    int total() const { return offset_.empty() ? 0 : offset_.back(); }
    int offset(int i) const { return offset_[static_cast<std::size_t>(i)]; }
    int flat(int i, int j) const { return offset(i) + j; }
    // Inverse of flat(); linear scan, fine for diagnostics.
    std::pair<int, int> split(int f) const;

    const std::vector<int>& type_counts() const { return k_; }
    bool operator==(const Layout&) const = default;

private:
    std::vector<int> k_;
    std::vector<int> offset_;  // size n+1, offset_[n] == N
};

// A multiplicity vector, one entry per component type, in Layout order.
// Interpretation (original vs normalized coordinates) comes from context.
using Config = std::vector<Count>;

// Raw problem data as read from an instance file.
struct Instance {
    Layout layout;
    std::vector<double> r;     // component reliability, each in (0,1)
    std::vector<Money> cost;   // integer cost, each >= 1
    std::vector<Count> lower;  // l_ij >= 0
    std::vector<Count> upper;  // u_ij >= l_ij
    double r0 = 0.0;           // required system reliability, in (0,1)
};

// Ingestion bounds. Keeping sum(cost*upper) well inside int64 means every
// budget coordinate in the search is exact.
inline constexpr Count kMaxUpperBound = 1'000'000;
inline constexpr Money kMaxUnitCost = 1'000'000'000;

// Throws ValidationError naming the offending field.
void validate(const Instance& inst);

// Instance with lower bounds shifted to zero and components of each
// subsystem reordered by non-increasing cost (stable on the original index).
// The shifted-out lower bounds appear as per-subsystem baseline
// log-unreliability terms so that reliability values match the original
// coordinates.
struct NormalizedInstance {
    Layout layout;
    std::vector<double> r;          // permuted
    std::vector<double> log_unrel;  // log1p(-r), permuted, precomputed
    std::vector<Money> cost;        // permuted; non-increasing within a subsystem
    std::vector<Count> upper;       // u - l, permuted
    std::vector<int> perm;          // flat normalized index -> flat original index
    std::vector<Count> shift;       // original lower bounds, original order
    std::vector<double> baseline_log_unrel;  // per subsystem, from the shifted l
    std::vector<Count> min_units;   // per subsystem: max(0, 1 - sum_j l_ij)
    double r0 = 0.0;
    Money c0 = -1;                  // budget for the linear cut; < 0 until set

    bool has_budget() const { return c0 >= 0; }
};

NormalizedInstance normalize(const Instance& inst);

// Maps a normalized-coordinate configuration back to original coordinates
// (inverse permutation, lower bounds added back).
Config denormalize(const NormalizedInstance& ninst, const Config& x);

// Inverse of denormalize(); the argument must dominate the lower bounds.
Config normalize_config(const NormalizedInstance& ninst, const Config& x_orig);

// R(x) = prod_i (1 - prod_j (1-r_ij)^(x_ij)), evaluated per subsystem in the
// log domain: factor_i = -expm1(sum_j x_ij * log1p(-r_ij)).
double system_reliability(const Instance& inst, const Config& x);
double system_reliability(const NormalizedInstance& ninst, const Config& x);

// Log-unreliability of one subsystem; exposed so incremental callers can
// recompute exactly the factor the full evaluation would.
double subsystem_log_unrel(const NormalizedInstance& ninst, const Config& x, int i);

// Exact comparison, no epsilon.
bool is_reliable(const Instance& inst, const Config& x, double r0);
bool is_reliable(const NormalizedInstance& ninst, const Config& x, double r0);

Money total_cost(const Instance& inst, const Config& x);
Money total_cost(const NormalizedInstance& ninst, const Config& x);

// Surpluses of the three inequality groups at x. A configuration with
// x >= 0 is LRP-feasible iff every entry is >= 0.
struct SlackVector {
    std::vector<Count> d;  // subsystem surplus: sum_j x_ij - min_units_i
    std::vector<Count> t;  // headroom: u_ij - x_ij
    Count b = 0;           // remaining budget: c0 - cost(x)
};

// Requires a budget on the instance.
SlackVector slacks(const NormalizedInstance& ninst, const Config& x);

// x >= 0 and all slacks >= 0, without materializing the SlackVector.
bool lrp_feasible(const NormalizedInstance& ninst, const Config& x);

}  // namespace rapsolve
