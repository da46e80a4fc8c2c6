#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rapsolve/instance_io.hpp"
#include "rapsolve/solver.hpp"

namespace rapsolve {

// Experiment grids: each suite fixes the generator parameters and sweeps a
// list of (n, k) sizes, solving `reps` fresh instances per size.
struct BenchSuite {
    std::string name;
    GeneratorSpec base;               // n/k/seed filled in per row and rep
    std::vector<std::pair<int, int>> rows;  // (n, k)
};

// table1: uniform draws, r in [0.99, 0.998], c in [10, 20], u = 4, R0 = 0.90
// table2: the same, ordered (reliability and cost correlated)
// table3: ordered, r in [0.98, 0.99]
BenchSuite bench_suite(const std::string& name);

struct BenchRowResult {
    int n = 0;
    int k = 0;
    int instances = 0;
    double mean_nodes_generated = 0.0;
    double mean_nodes_expanded = 0.0;
    double mean_wall_time_s = 0.0;
    std::string error;  // non-empty marks an aborted row
};

// Seed for instance `rep` of row (n, k); splitmix64 over the row coordinates
// so rows can run in any order (or in parallel) and still reproduce.
std::uint64_t bench_instance_seed(std::uint64_t seed, int n, int k, int rep);

// Generates and solves `reps` instances of one row. Solver errors abort the
// row and land in `error`.
BenchRowResult run_bench_row(const BenchSuite& suite, int n, int k, int reps,
                             std::uint64_t seed, const WalkOptions& options = {});

// Fully solves one generated instance: normalize, greedy budget, test set,
// walk back. The convenience entry the CLI and the suites share.
SolveReport solve_instance(const Instance& inst, const WalkOptions& options = {});

std::string write_bench_csv(const BenchSuite& suite, const std::vector<BenchRowResult>& rows,
                            int reps, std::uint64_t seed);

}  // namespace rapsolve
